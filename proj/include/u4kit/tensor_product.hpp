#pragma once

#include <functional>
#include <map>
#include <stdexcept>

#include "u4kit/irrep.hpp"

namespace u4 {

// labels that do not couple (distinct from malformed input)
struct coupling_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// f'' -> outer multiplicity eta_max, largest label first.
using Decomposition = std::map<Irrep, int, std::greater<Irrep>>;

Decomposition decompose(const Irrep& f, const Irrep& fp);
int outer_multiplicity(const Irrep& f, const Irrep& fp, const Irrep& fpp);

}  // namespace u4
