#pragma once

#include <string>
#include <vector>

#include "abspec/abmodel.hpp"

namespace abspec {

struct CheckResult {
    std::string name;
    bool pass;
    double measured;   // worst residual / ratio observed
    double threshold;  // what it was compared against
    std::string detail;
};

// Localization-table conformance: a 3x3x3 sample grid per table row, every
// interval down to z = -10.5 must hold exactly the predicted root count.
std::vector<CheckResult> check_tables(const ModelParams& p);

// Degree-4 series vs bisection: halving the parameter scale 0.02 -> 0.01
// must shrink the error by a factor in [16, 64] (nominal 2^5).
std::vector<CheckResult> check_series(const ModelParams& p);

// Laguerre sum (2000 terms) against the closed F*G form, sectors -1, 0, 1.
std::vector<CheckResult> check_green(const ModelParams& p);

// Extension algebra: Lambda<->U round trips, the Lambda=0 unitary, the J
// identity, det M_m relations, N_m against the quadrature oracle.
std::vector<CheckResult> check_unitary(const ModelParams& p);

// Digamma difference identity against adaptive quadrature.
std::vector<CheckResult> check_digamma();

// Weidmann gap bound for 100 seeded random parameter triples.
std::vector<CheckResult> check_gaps(const ModelParams& p);

std::vector<CheckResult> check_all(const ModelParams& p);

// Dispatch by suite name: tables|series|green|unitary|digamma|gaps|all.
// Throws std::invalid_argument for an unknown suite.
std::vector<CheckResult> run_suite(const std::string& suite, const ModelParams& p);

}  // namespace abspec
