#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "khoflow/complex.hpp"

namespace khoflow {

using BigInt = boost::multiprecision::cpp_int;

using DenseMat = std::vector<std::vector<BigInt>>;  // row-major, rectangular

struct SmithResult {
    std::vector<BigInt> factors;  // invariant factors d1 | d2 | ... | dr, all positive
    int rank = 0;
};

// Diagonalize by unimodular row/column operations, pivoting on the smallest
// surviving entry; exact arbitrary-precision arithmetic throughout.
SmithResult smith_normal_form(DenseMat m);
SmithResult smith_normal_form(const SparseMat& m);

DenseMat to_dense(const SparseMat& m);

}  // namespace khoflow
