#pragma once

#include <string>
#include <vector>

#include "eqlab/instance.hpp"
#include "eqlab/report.hpp"

namespace eqlab {

// axioms, equ-equivalence, eff-quotient, interval, encoding, all.
const std::vector<std::string>& suite_names();

// Throws UnknownObject for an unknown suite and CapExceeded when an
// enumeration outgrows config.cap.
Report run_suite(const Instance& inst, const std::string& suite);

// The three encoding checks on their own; used by the `encoding` suite.
Report encoding_check(const std::vector<NamedBase>& bases, std::size_t L, std::uint64_t seed,
                      std::size_t budget, std::size_t samples = 1000, std::size_t cap = kDefaultCap);

}  // namespace eqlab
