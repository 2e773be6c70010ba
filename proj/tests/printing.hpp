#pragma once

#include <doctest.h>

#include "unischubert/permutation.hpp"
#include "unischubert/poly_io.hpp"

namespace doctest {

template <>
struct StringMaker<unischubert::Polynomial> {
    static String convert(const unischubert::Polynomial& p) { return unischubert::to_text(p).c_str(); }
};

template <>
struct StringMaker<unischubert::Permutation> {
    static String convert(const unischubert::Permutation& w) { return w.to_string().c_str(); }
};

} // namespace doctest
