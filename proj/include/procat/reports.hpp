#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "procat/io.hpp"

namespace procat {

// Check and example pipelines shared by the CLI and the tests. Every
// report is a pure function of its arguments (no timings, no addresses).

Report check_wfc(const WfcInput& in);
/// One verdict per node plus the overall acceptance.
Report check_knil(const KNilCertificate& cert, const std::string& basis);
/// Random FinSet towers over posets of <= 8 elements, each map special for
/// a class chosen round-robin; every special class must be levelwise.
Report check_special_implies_levelwise(int count, std::uint64_t seed);
/// factorize_diagram on random inputs, base "finset" or "kan".
Report check_factorization(const std::string& base, int count, std::uint64_t seed);
/// Unit iso and idempotence of cosk_n on the bundled objects, and the
/// cosk_0 level formula for |S| <= 3, m <= 4.
Report check_coskeleta();
/// Kan and minimality verdicts for a built simplicial set.
Report check_sset(const TauSSet& x);

/// pro-H_1 non-iso and Morel agreement for the circle (profinite.v1 body
/// under "profinite").
Report example_circle(Elem depth, const std::vector<long long>& primes);
Report example_postnikov_z4();
Report example_quillen_a();
Report example_thomason();
Report example_wfc();
/// π_1, π_2 and the Γ level count.
Report example_eilenberg_maclane();
/// Class counts of {Z/n} -> Z/m before and after the factorial reindexing.
Report example_reindex(const std::vector<Elem>& depths, const std::vector<int>& targets);
/// [{B Z/n}, B Z/m] through homotopy classes and through π_0 of mapping
/// spaces.
Report example_mapping_space(const std::vector<int>& targets);

/// Names accepted by `example`.
std::vector<std::string> example_names();
Report run_example(const std::string& name, Elem depth, const std::vector<long long>& primes);

}  // namespace procat
