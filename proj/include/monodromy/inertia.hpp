#pragma once

#include "monodromy/matrix.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace monodromy {

// Closure enumeration or other resource budget exceeded; maps to its own
// process exit code so scripts can distinguish it from bad input.
struct ResourceCapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class CoefficientMode { Integer, Residue };

// A finitely generated matrix group standing in for an inertia image: one
// tame generator and a (possibly empty) finite wild part, with optional
// invariant symplectic form. In integer mode the entries represent an
// ell-adic image (ell recorded); in residue mode everything is read mod n.
struct InertiaRep {
    int dim = 0;
    CoefficientMode mode = CoefficientMode::Integer;
    Int ell;      // integer mode: the designated prime
    Int modulus;  // residue mode: the modulus n
    ExactMatrix tame;
    std::vector<ExactMatrix> wild;
    std::optional<ExactMatrix> form;
    std::string label;

    // tame first, then wild in order; words "t", "w1", "w2", ...
    std::vector<ExactMatrix> generators() const;
    std::vector<std::string> generator_words() const;

    // Hard checks: dim even and positive, matrices square of size dim,
    // invertible over the coefficient ring, quasi-unipotent (integer mode),
    // form preserved when present. Throws std::invalid_argument.
    void validate() const;
};

enum class Verdict { SemistablePattern, BrieflyUnstablePattern, NotSemistablePattern, Indeterminate };

const char* verdict_name(Verdict v);

struct EvidenceRecord {
    std::string word;
    std::string test;
    bool pass = false;
};

struct CheckResult {
    bool pass = false;
    std::vector<EvidenceRecord> evidence;
};

struct Classification {
    Verdict verdict = Verdict::Indeterminate;
    std::string reason;
    std::string theorem;
    std::vector<EvidenceRecord> evidence;
};

struct ClosureElement {
    ExactMatrix mat;
    std::string word;
};

struct ClassifyOptions {
    std::size_t closure_cap = 20000;
    int word_bound = 8;
};

// Breadth-first closure of the generators under multiplication mod n,
// starting from the identity ("e"). Deterministic order. Throws
// ResourceCapError if more than cap elements appear, std::invalid_argument
// if a generator is not invertible mod n.
std::vector<ClosureElement> group_closure(const InertiaRep& rep, const Int& n, std::size_t cap);

// (g - I)^2 = 0 for the tame generator, every wild generator, and every
// product wild*tame^i, i = 0..word_bound.
CheckResult check_tate_criterion(const InertiaRep& rep, int word_bound = 8);

// Every checked element is unipotent or has unipotent negative.
CheckResult check_pm_unipotent(const InertiaRep& rep, int word_bound = 8);

// Common fixed space of the generators is zero: the stacked matrix of all
// (g - I) blocks has full column rank over Q, cross-checked mod ell.
bool fixed_space_trivial(const InertiaRep& rep, const Int& ell);
bool fixed_space_trivial(const InertiaRep& rep);

// For every closure element sigma mod n, the induced action M on the k-th
// exterior power of the dual must satisfy (M - I)^r == 0 mod n; with
// signed = true an element may instead satisfy (M + I)^r == 0 mod n.
CheckResult check_cohomology_criterion(const InertiaRep& rep, int k, int r, const Int& n,
                                       bool signed_variant,
                                       const ClassifyOptions& opts = {});

// Verdict from integer-mode data alone: square-vanishing everywhere gives
// SemistablePattern; otherwise +-unipotency with trivial fixed space gives
// BrieflyUnstablePattern; otherwise NotSemistablePattern.
Classification classify_integer(const InertiaRep& rep, int word_bound = 8);

// Full decision procedure at modulus n for wedge degree k and exponent r.
Classification classify(const InertiaRep& rep, int k, int r, const Int& n,
                        const ClassifyOptions& opts = {});

}  // namespace monodromy
