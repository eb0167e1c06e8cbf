#pragma once

#include "rsharp/bivar_poly.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace rsharp {

struct CorpusOptions {
    int count = 200;
    std::uint64_t seed = 7;
    int max_degree = 12;
};

// Random mixed-homogeneous polynomials with phi(0) = 0 and grad phi(0) = 0 and total degree
// at most max_degree: generic support-line sums, factor products, homogeneous forms and powers.
std::vector<BivarPoly> generate_corpus(const CorpusOptions& opt);

struct CorpusEntry {
    std::string expr;
    std::string label;
    bool passed = true;
    std::vector<std::string> failures;
};

struct CorpusReport {
    CorpusOptions options;
    std::vector<CorpusEntry> entries;
    int passed = 0;
    int failed = 0;
    double seconds = 0.0;
    bool ok() const { return failed == 0; }
};

// Equivalence of the two formulations, the symbolic identities and the vertex formulas on one input.
CorpusEntry sweep_one(const BivarPoly& phi);

CorpusReport run_corpus(const CorpusOptions& opt);

}  // namespace rsharp
