#include "monodromy/inertia.hpp"

#include "monodromy/cyclotomic.hpp"
#include "monodromy/spectral.hpp"
#include "monodromy/wedge.hpp"

#include <deque>
#include <set>
#include <sstream>

namespace monodromy {

namespace {

std::string ordinal_word(std::size_t j) { return "w" + std::to_string(j + 1); }

Int smallest_prime_coprime_to(const Int& n) {
    for (Int p = 2;; ++p) {
        if (is_prime(p) && n % p != 0) return p;
    }
}

}  // namespace

std::vector<ExactMatrix> InertiaRep::generators() const {
    std::vector<ExactMatrix> out{tame};
    out.insert(out.end(), wild.begin(), wild.end());
    return out;
}

std::vector<std::string> InertiaRep::generator_words() const {
    std::vector<std::string> out{"t"};
    for (std::size_t j = 0; j < wild.size(); ++j) out.push_back(ordinal_word(j));
    return out;
}

void InertiaRep::validate() const {
    if (dim <= 0 || dim % 2 != 0)
        throw std::invalid_argument("InertiaRep: dim must be a positive even integer");
    if (mode == CoefficientMode::Integer) {
        if (!is_prime(ell)) throw std::invalid_argument("InertiaRep: integer mode needs a prime ell");
    } else {
        if (modulus < 2) throw std::invalid_argument("InertiaRep: residue mode needs modulus >= 2");
    }
    const auto gens = generators();
    const auto words = generator_words();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const auto& g = gens[i];
        if (g.dim() != dim)
            throw std::invalid_argument("InertiaRep: generator " + words[i] + " is not dim x dim");
        const Int det = determinant(g);
        if (mode == CoefficientMode::Integer) {
            if (det == 0 || det % ell == 0)
                throw std::invalid_argument("InertiaRep: generator " + words[i] +
                                            " is not invertible over the ell-adic integers");
            if (!is_quasi_unipotent(g).is_quasi_unipotent)
                throw std::invalid_argument("InertiaRep: generator " + words[i] +
                                            " is not quasi-unipotent");
        } else {
            if (gcd(pos_mod(det, modulus), modulus) != 1)
                throw std::invalid_argument("InertiaRep: generator " + words[i] +
                                            " is not invertible mod n");
        }
    }
    if (form) {
        if (form->dim() != dim)
            throw std::invalid_argument("InertiaRep: symplectic form is not dim x dim");
        if (form->transpose() != -*form)
            throw std::invalid_argument("InertiaRep: symplectic form is not antisymmetric");
        for (std::size_t i = 0; i < gens.size(); ++i) {
            const ExactMatrix lhs = gens[i].transpose() * *form * gens[i];
            const bool ok = (mode == CoefficientMode::Integer)
                                ? lhs == *form
                                : (lhs - *form).reduced_mod(modulus).is_zero();
            if (!ok)
                throw std::invalid_argument("InertiaRep: generator " + words[i] +
                                            " does not preserve the symplectic form");
        }
    }
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::SemistablePattern: return "SemistablePattern";
        case Verdict::BrieflyUnstablePattern: return "BrieflyUnstablePattern";
        case Verdict::NotSemistablePattern: return "NotSemistablePattern";
        case Verdict::Indeterminate: return "Indeterminate";
    }
    return "Indeterminate";
}

std::vector<ClosureElement> group_closure(const InertiaRep& rep, const Int& n, std::size_t cap) {
    if (n < 2) throw std::invalid_argument("group_closure: modulus must be >= 2");
    const auto gens = rep.generators();
    const auto words = rep.generator_words();
    std::vector<ExactMatrix> reduced;
    reduced.reserve(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const Int det = pos_mod(determinant(gens[i]), n);
        if (gcd(det, n) != 1)
            throw std::invalid_argument("group_closure: generator " + words[i] +
                                        " is not invertible mod n");
        reduced.push_back(gens[i].reduced_mod(n));
    }

    std::vector<ClosureElement> out;
    std::set<std::vector<Int>> seen;
    std::deque<std::size_t> queue;
    const ExactMatrix id = ExactMatrix::identity(rep.dim).reduced_mod(n);
    seen.insert(id.data());
    out.push_back({id, "e"});
    queue.push_back(0);
    while (!queue.empty()) {
        const std::size_t cur = queue.front();
        queue.pop_front();
        for (std::size_t gi = 0; gi < reduced.size(); ++gi) {
            ExactMatrix next = mat_mul_mod(out[cur].mat, reduced[gi], n);
            if (seen.count(next.data())) continue;
            if (out.size() >= cap)
                throw ResourceCapError("group_closure: closure mod " + n.str() +
                                       " exceeds cap " + std::to_string(cap) + "; increase cap");
            const std::string word =
                out[cur].word == "e" ? words[gi] : out[cur].word + "." + words[gi];
            seen.insert(next.data());
            out.push_back({std::move(next), word});
            queue.push_back(out.size() - 1);
        }
    }
    return out;
}

namespace {

// Tame generator, wild generators, and wild*tame^i up to the word bound: the
// finite slice standing in for the whole group in integer mode.
std::vector<ClosureElement> checked_slice(const InertiaRep& rep, int word_bound) {
    std::vector<ClosureElement> out;
    out.push_back({rep.tame, "t"});
    for (std::size_t j = 0; j < rep.wild.size(); ++j)
        out.push_back({rep.wild[j], ordinal_word(j)});
    for (std::size_t j = 0; j < rep.wild.size(); ++j) {
        ExactMatrix acc = rep.wild[j];
        for (int i = 0; i <= word_bound; ++i) {
            out.push_back({acc, ordinal_word(j) + ".t^" + std::to_string(i)});
            acc = acc * rep.tame;
        }
    }
    return out;
}

CheckResult run_elementwise(const InertiaRep& rep, int word_bound, const char* test,
                            bool (*pred)(const ExactMatrix&)) {
    CheckResult res;
    res.pass = true;
    for (const auto& el : checked_slice(rep, word_bound)) {
        const bool ok = pred(el.mat);
        res.evidence.push_back({el.word, test, ok});
        res.pass = res.pass && ok;
    }
    return res;
}

}  // namespace

CheckResult check_tate_criterion(const InertiaRep& rep, int word_bound) {
    if (rep.mode != CoefficientMode::Integer)
        throw std::invalid_argument("check_tate_criterion: requires integer mode");
    return run_elementwise(rep, word_bound, "square-vanishing", [](const ExactMatrix& g) {
        const ExactMatrix n = g - ExactMatrix::identity(g.dim());
        return (n * n).is_zero();
    });
}

CheckResult check_pm_unipotent(const InertiaRep& rep, int word_bound) {
    if (rep.mode != CoefficientMode::Integer)
        throw std::invalid_argument("check_pm_unipotent: requires integer mode");
    return run_elementwise(rep, word_bound, "pm-unipotent", [](const ExactMatrix& g) {
        return is_unipotent(g) || is_neg_unipotent(g);
    });
}

bool fixed_space_trivial(const InertiaRep& rep, const Int& ell) {
    if (!is_prime(ell)) throw std::invalid_argument("fixed_space_trivial: ell must be prime");
    std::vector<std::vector<Int>> stacked;
    for (const auto& g : rep.generators()) {
        const ExactMatrix n = g - ExactMatrix::identity(rep.dim);
        for (int i = 0; i < rep.dim; ++i) {
            std::vector<Int> row(static_cast<std::size_t>(rep.dim));
            for (int j = 0; j < rep.dim; ++j) row[static_cast<std::size_t>(j)] = n.at(i, j);
            stacked.push_back(std::move(row));
        }
    }
    const int r_exact = rank_exact(stacked);
    const int r_mod = rank_mod_prime(stacked, ell);
    if (r_mod > r_exact)
        throw std::logic_error("fixed_space_trivial: mod-ell rank exceeds exact rank");
    return r_exact == rep.dim;
}

bool fixed_space_trivial(const InertiaRep& rep) {
    const Int ell = rep.mode == CoefficientMode::Integer ? rep.ell
                                                         : smallest_prime_coprime_to(rep.modulus);
    return fixed_space_trivial(rep, ell);
}

CheckResult check_cohomology_criterion(const InertiaRep& rep, int k, int r, const Int& n,
                                       bool signed_variant, const ClassifyOptions& opts) {
    if (k < 1 || k > rep.dim - 1)
        throw std::invalid_argument("check_cohomology_criterion: requires 1 <= k <= dim-1");
    if (r < 1) throw std::invalid_argument("check_cohomology_criterion: requires r >= 1");
    CheckResult res;
    res.pass = true;
    const auto closure = group_closure(rep, n, opts.closure_cap);
    const int wdim = WedgeBasisIndex::build(rep.dim, k).size();
    const ExactMatrix id = ExactMatrix::identity(wdim);
    for (const auto& el : closure) {
        const ExactMatrix m = cohomology_action_mod(el.mat, k, n);
        const ExactMatrix minus = (m - id).reduced_mod(n);
        bool ok = mat_pow_mod(minus, r, n).is_zero();
        res.evidence.push_back({el.word, "divisibility-unsigned", ok});
        if (!ok && signed_variant) {
            const ExactMatrix plus = (m + id).reduced_mod(n);
            ok = mat_pow_mod(plus, r, n).is_zero();
            res.evidence.push_back({el.word, "divisibility-signed", ok});
        }
        res.pass = res.pass && ok;
    }
    return res;
}

namespace {

void append_caveats(const InertiaRep& rep, Classification& c) {
    if (!rep.form)
        c.reason += "; caveat: no symplectic form declared, so the +-1 scaling restriction "
                    "is unproven for this input";
    if (c.verdict == Verdict::BrieflyUnstablePattern)
        c.reason += "; caveat: residue characteristic 2 subtleties (henselian valuation ring) "
                    "are not modeled";
}

void merge_evidence(Classification& c, const CheckResult& r) {
    c.evidence.insert(c.evidence.end(), r.evidence.begin(), r.evidence.end());
}

}  // namespace

Classification classify_integer(const InertiaRep& rep, int word_bound) {
    if (rep.mode != CoefficientMode::Integer)
        throw std::invalid_argument("classify_integer: requires integer mode");
    Classification out;
    const CheckResult tate = check_tate_criterion(rep, word_bound);
    merge_evidence(out, tate);
    if (tate.pass) {
        out.verdict = Verdict::SemistablePattern;
        out.theorem = "square-vanishing";
        out.reason = "every checked element g satisfies (g-1)^2 = 0 over the integers";
        append_caveats(rep, out);
        return out;
    }
    const CheckResult pm = check_pm_unipotent(rep, word_bound);
    merge_evidence(out, pm);
    const bool fixed = fixed_space_trivial(rep);
    out.evidence.push_back({"all-generators", "fixed-space-trivial", fixed});
    if (pm.pass && fixed) {
        out.verdict = Verdict::BrieflyUnstablePattern;
        out.theorem = "pm-unipotent+trivial-fixed-space";
        out.reason = "square-vanishing fails, but every checked element is unipotent up to "
                     "sign and the common fixed space is zero";
    } else {
        out.verdict = Verdict::NotSemistablePattern;
        out.theorem = "integer-pattern-tests";
        std::ostringstream os;
        os << "square-vanishing fails and the fallback tests exclude the remaining patterns "
              "(pm-unipotent="
           << (pm.pass ? "true" : "false") << ", fixed-space-trivial=" << (fixed ? "true" : "false")
           << ")";
        out.reason = os.str();
    }
    append_caveats(rep, out);
    return out;
}

Classification classify(const InertiaRep& rep, int k, int r, const Int& n,
                        const ClassifyOptions& opts) {
    if (k < 1) throw std::invalid_argument("classify: requires k >= 1");
    if (k >= rep.dim) throw std::invalid_argument("classify: requires k < dim");
    if (k >= r) throw std::invalid_argument("classify: requires k < r");
    if (n < 1) throw std::invalid_argument("classify: requires n >= 1");
    if (rep.mode == CoefficientMode::Residue && n != rep.modulus)
        throw std::invalid_argument("classify: residue-mode rep fixes the modulus; n must match");

    Classification out;
    const bool mid_window = (2 <= k && k <= rep.dim - 2);
    const PrimePowerSet exceptional = mid_window ? n_prime_set(r) : n_set(r);
    if (exceptional.contains(n)) {
        out.verdict = Verdict::Indeterminate;
        out.theorem = "exceptional-modulus";
        std::ostringstream os;
        os << "n=" << n.str() << " lies in the exceptional set "
           << (mid_window ? "N'" : "N") << "(" << r << ") = " << exceptional.to_string()
           << " for wedge degree k=" << k
           << "; a sharpness family passes the mod-n divisibility test without being "
              "semistable, so the criterion cannot decide";
        out.reason = os.str();
        append_caveats(rep, out);
        return out;
    }

    const bool integer_data = rep.mode == CoefficientMode::Integer;
    const CheckResult unsigned_res = check_cohomology_criterion(rep, k, r, n, false, opts);
    merge_evidence(out, unsigned_res);

    if (k % 2 == 1) {
        if (unsigned_res.pass) {
            out.verdict = Verdict::SemistablePattern;
            out.theorem = "odd-k-unsigned-divisibility";
            out.reason = "(sigma-1)^r kills the k-th wedge mod n for every closure element, "
                         "with n outside the exceptional set and k odd";
        } else {
            const CheckResult signed_res = check_cohomology_criterion(rep, k, r, n, true, opts);
            merge_evidence(out, signed_res);
            if (signed_res.pass) {
                if (integer_data) {
                    const CheckResult pm = check_pm_unipotent(rep, opts.word_bound);
                    merge_evidence(out, pm);
                    const bool fixed = fixed_space_trivial(rep);
                    out.evidence.push_back({"all-generators", "fixed-space-trivial", fixed});
                    if (pm.pass && fixed) {
                        out.verdict = Verdict::BrieflyUnstablePattern;
                        out.theorem = "odd-k-signed-divisibility+integer-confirmation";
                        out.reason = "each closure element satisfies the (sigma-1)^r or "
                                     "(sigma+1)^r divisibility mod n, confirmed by integer-mode "
                                     "+-unipotency and trivial fixed space";
                    } else {
                        out.verdict = Verdict::NotSemistablePattern;
                        out.theorem = "integer-mode-exclusion";
                        std::ostringstream os;
                        os << "signed divisibility held mod n but integer-mode confirmation "
                              "failed (pm-unipotent="
                           << (pm.pass ? "true" : "false")
                           << ", fixed-space-trivial=" << (fixed ? "true" : "false") << ")";
                        out.reason = os.str();
                    }
                } else {
                    out.verdict = Verdict::BrieflyUnstablePattern;
                    out.theorem = "odd-k-signed-divisibility";
                    out.reason = "each closure element satisfies the (sigma-1)^r or (sigma+1)^r "
                                 "divisibility mod n; unconfirmed: no integer-mode data for the "
                                 "+-unipotency test";
                }
            } else {
                out.verdict = Verdict::NotSemistablePattern;
                out.theorem = "divisibility-failure";
                out.reason = "some closure element fails both the (sigma-1)^r and (sigma+1)^r "
                             "divisibility tests mod n";
            }
        }
    } else {
        if (unsigned_res.pass) {
            if (integer_data) {
                const CheckResult tate = check_tate_criterion(rep, opts.word_bound);
                merge_evidence(out, tate);
                if (tate.pass) {
                    out.verdict = Verdict::SemistablePattern;
                    out.theorem = "even-k-divisibility+square-vanishing";
                    out.reason = "(sigma-1)^r kills the k-th wedge mod n and integer-mode "
                                 "square-vanishing holds";
                } else {
                    const CheckResult pm = check_pm_unipotent(rep, opts.word_bound);
                    merge_evidence(out, pm);
                    const bool fixed = fixed_space_trivial(rep);
                    out.evidence.push_back({"all-generators", "fixed-space-trivial", fixed});
                    if (pm.pass && fixed) {
                        out.verdict = Verdict::BrieflyUnstablePattern;
                        out.theorem = "even-k-divisibility+pm-unipotent";
                        out.reason = "(sigma-1)^r kills the k-th wedge mod n; integer-mode tests "
                                     "show unipotency only up to sign with trivial fixed space";
                    } else {
                        out.verdict = Verdict::NotSemistablePattern;
                        out.theorem = "integer-mode-exclusion";
                        std::ostringstream os;
                        os << "mod-n divisibility held but integer-mode tests exclude both "
                              "patterns (pm-unipotent="
                           << (pm.pass ? "true" : "false")
                           << ", fixed-space-trivial=" << (fixed ? "true" : "false") << ")";
                        out.reason = os.str();
                    }
                }
            } else {
                out.verdict = Verdict::Indeterminate;
                out.theorem = "even-k-sign-ambiguity";
                out.reason = "wedge degree is even, so the mod-n actions of g and -g coincide; "
                             "integer-mode data is required to separate the semistable and "
                             "briefly-unstable patterns";
            }
        } else {
            out.verdict = Verdict::NotSemistablePattern;
            out.theorem = "divisibility-failure";
            out.reason = "some closure element fails the (sigma-1)^r divisibility test mod n";
        }
    }
    append_caveats(rep, out);
    return out;
}

}  // namespace monodromy
