#pragma once

#include "monodromy/inertia.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace monodromy {

struct SuiteFailure {
    std::string case_id;
    std::string detail;
    // Machine-reloadable reproduction: JSON for the offending input.
    std::string input;
};

struct SuiteReport {
    std::string suite;
    int cases = 0;
    int passes = 0;
    std::vector<SuiteFailure> failures;
    // Observations worth reporting that are not pass/fail assertions.
    std::vector<std::string> notes;
    std::uint64_t seed = 0;
    double wall_ms = 0.0;

    bool passed() const { return failures.empty() && passes == cases; }
};

// tame = [[I,B],[0,I]] with B random symmetric: unipotent of echelon <= 2,
// preserving the standard form [[0,I],[-I,0]].
InertiaRep gen_semistable_family(int d, std::uint64_t seed);

// tame = -[[I,B],[0,I]]: unipotent only after sign flip, trivial fixed space.
InertiaRep gen_briefly_unstable_family(int d, std::uint64_t seed);

// tame = I_{2a} (+) companion(Phi_ell): a good-reduction factor times an
// order-ell twist. Odd ell only; no symplectic form is constructed.
InertiaRep gen_example62(const Int& ell, int a);

// The ell = 2 counterpart: tame = I_{2a} (+) (-I_2).
InertiaRep gen_example62_quadratic(int a);

SuiteReport verify_level2lem(int dim_max, int m_max, std::uint64_t seed);
SuiteReport verify_lin(int d_max, int trials, std::uint64_t seed);
SuiteReport verify_newlinlem(const std::vector<Int>& ells, int dim_cap);
SuiteReport verify_unip(const Int& ell, int dim, const std::vector<int>& k_list,
                        std::uint64_t seed);
SuiteReport verify_unipex_contrapositive(const Int& ell, int k, int m);
SuiteReport verify_example_sharpness(const Int& ell, int m, int r,
                                     const std::vector<int>& k_list);

// Names accepted by run_suite, in canonical order.
std::vector<std::string> suite_names();

// Run one named suite with default desk-scale parameters. Throws
// std::invalid_argument for an unknown name.
std::vector<SuiteReport> run_suite(const std::string& name, std::uint64_t seed);

}  // namespace monodromy
