#include "monodromy/verify.hpp"

#include "monodromy/cyclotomic.hpp"
#include "monodromy/serialize.hpp"
#include "monodromy/spectral.hpp"
#include "monodromy/wedge.hpp"

#include <chrono>
#include <random>
#include <sstream>
#include <stdexcept>

namespace monodromy {

namespace {

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    // Engine output reduced directly: identical streams on every platform.
    int pick(int lo, int hi) {
        return lo + static_cast<int>(eng() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    int pick_nonzero(int bound) {
        int v = 0;
        while (v == 0) v = pick(-bound, bound);
        return v;
    }
};

class Recorder {
public:
    Recorder(std::string suite, std::uint64_t seed) : start_(std::chrono::steady_clock::now()) {
        report_.suite = std::move(suite);
        report_.seed = seed;
    }

    void record(const std::string& case_id, bool ok, const std::string& detail = "",
                const std::string& input = "") {
        ++report_.cases;
        if (ok) {
            ++report_.passes;
        } else {
            report_.failures.push_back(
                {case_id, detail.empty() ? "assertion failed" : detail, input});
        }
    }

    void note(const std::string& text) { report_.notes.push_back(text); }

    SuiteReport finish() {
        report_.wall_ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - start_)
                              .count();
        return report_;
    }

private:
    SuiteReport report_;
    std::chrono::steady_clock::time_point start_;
};

std::string matrix_input(const ExactMatrix& a) { return matrix_to_json(a).dump(); }
std::string rep_input(const InertiaRep& r) { return rep_to_json(r).dump(); }

ExactMatrix jordan_block(int n) {
    ExactMatrix m = ExactMatrix::identity(n);
    for (int i = 0; i + 1 < n; ++i) m.at(i, i + 1) = 1;
    return m;
}

ExactMatrix companion(const IntPolynomial& p) {
    if (!p.is_monic()) throw std::invalid_argument("companion: polynomial must be monic");
    const int n = p.degree();
    ExactMatrix m(n);
    for (int i = 1; i < n; ++i) m.at(i, i - 1) = 1;
    for (int i = 0; i < n; ++i) m.at(i, n - 1) = -p.coeff(i);
    return m;
}

ExactMatrix random_symmetric(Rng& rng, int d, int bound) {
    ExactMatrix b(d);
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) {
            const Int v = rng.pick(-bound, bound);
            b.at(i, j) = v;
            b.at(j, i) = v;
        }
    return b;
}

ExactMatrix random_unimodular(Rng& rng, int n, int factors) {
    ExactMatrix m = ExactMatrix::identity(n);
    if (n == 1) {
        m.at(0, 0) = rng.pick(0, 1) == 0 ? 1 : -1;
        return m;
    }
    for (int f = 0; f < factors; ++f) {
        int i = rng.pick(0, n - 1);
        int j = rng.pick(0, n - 1);
        if (i == j) j = (j + 1) % n;
        ExactMatrix e = ExactMatrix::identity(n);
        e.at(i, j) = rng.pick_nonzero(2);
        m = m * e;
    }
    return m;
}

ExactMatrix random_unipotent_upper(Rng& rng, int n, int bound) {
    ExactMatrix m = ExactMatrix::identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) m.at(i, j) = rng.pick(-bound, bound);
    return m;
}

ExactMatrix block_2x2(const ExactMatrix& a, const ExactMatrix& b, const ExactMatrix& c,
                      const ExactMatrix& d) {
    const int n = a.dim();
    ExactMatrix m(2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            m.at(i, j) = a.at(i, j);
            m.at(i, n + j) = b.at(i, j);
            m.at(n + i, j) = c.at(i, j);
            m.at(n + i, n + j) = d.at(i, j);
        }
    return m;
}

ExactMatrix standard_form(int d) {
    const ExactMatrix id = ExactMatrix::identity(d);
    return block_2x2(ExactMatrix(d), id, -id, ExactMatrix(d));
}

ExactMatrix symmetric_block_unipotent(const ExactMatrix& b) {
    const int d = b.dim();
    const ExactMatrix id = ExactMatrix::identity(d);
    return block_2x2(id, b, ExactMatrix(d), id);
}

ExactMatrix random_symplectic(Rng& rng, int d, int rounds) {
    ExactMatrix m = ExactMatrix::identity(2 * d);
    const ExactMatrix id = ExactMatrix::identity(d);
    for (int t = 0; t < rounds; ++t) {
        ExactMatrix factor(2 * d);
        switch (rng.pick(0, 2)) {
            case 0:
                factor = block_2x2(id, random_symmetric(rng, d, 1), ExactMatrix(d), id);
                break;
            case 1:
                factor = block_2x2(id, ExactMatrix(d), random_symmetric(rng, d, 1), id);
                break;
            default: {
                const ExactMatrix a = random_unimodular(rng, d, 3);
                factor = block_2x2(a, ExactMatrix(d), ExactMatrix(d),
                                   mat_inverse_unimodular(a.transpose()));
                break;
            }
        }
        m = m * factor;
    }
    return m;
}

Int int_pow(const Int& base, int e) {
    Int out = 1;
    for (int i = 0; i < e; ++i) out *= base;
    return out;
}

long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long out = 1;
    for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

}  // namespace

InertiaRep gen_semistable_family(int d, std::uint64_t seed) {
    if (d < 1) throw std::invalid_argument("gen_semistable_family: d must be >= 1");
    Rng rng(seed);
    InertiaRep rep;
    rep.dim = 2 * d;
    rep.mode = CoefficientMode::Integer;
    rep.ell = 7;
    rep.tame = symmetric_block_unipotent(random_symmetric(rng, d, 3));
    rep.form = standard_form(d);
    rep.label = "semistable-d" + std::to_string(d) + "-seed" + std::to_string(seed);
    rep.validate();
    return rep;
}

InertiaRep gen_briefly_unstable_family(int d, std::uint64_t seed) {
    if (d < 1) throw std::invalid_argument("gen_briefly_unstable_family: d must be >= 1");
    Rng rng(seed);
    InertiaRep rep;
    rep.dim = 2 * d;
    rep.mode = CoefficientMode::Integer;
    rep.ell = 7;
    rep.tame = -symmetric_block_unipotent(random_symmetric(rng, d, 3));
    rep.form = standard_form(d);
    rep.label = "briefly-unstable-d" + std::to_string(d) + "-seed" + std::to_string(seed);
    rep.validate();
    return rep;
}

InertiaRep gen_example62(const Int& ell, int a) {
    if (!is_prime(ell) || ell == 2)
        throw std::invalid_argument("gen_example62: ell must be an odd prime");
    if (a < 1) throw std::invalid_argument("gen_example62: a must be >= 1");
    InertiaRep rep;
    rep.dim = 2 * a + (ell - 1).convert_to<int>();
    rep.mode = CoefficientMode::Integer;
    rep.ell = ell;
    rep.tame = direct_sum(ExactMatrix::identity(2 * a), companion(cyclotomic_prime_power(ell, 1)));
    rep.label = "example62-l" + ell.str() + "-a" + std::to_string(a);
    rep.validate();
    return rep;
}

InertiaRep gen_example62_quadratic(int a) {
    if (a < 1) throw std::invalid_argument("gen_example62_quadratic: a must be >= 1");
    InertiaRep rep;
    rep.dim = 2 * a + 2;
    rep.mode = CoefficientMode::Integer;
    rep.ell = 2;
    rep.tame = direct_sum(ExactMatrix::identity(2 * a), -ExactMatrix::identity(2));
    rep.label = "example62-l2-a" + std::to_string(a);
    rep.validate();
    return rep;
}

SuiteReport verify_level2lem(int dim_max, int m_max, std::uint64_t seed) {
    Recorder rec("level2lem", seed);
    Rng rng(seed);
    for (int dim = 2; dim <= dim_max; ++dim) {
        const std::string tag = "dim=" + std::to_string(dim);

        ExactMatrix e2(dim);
        e2.at(0, dim - 1) = 1;
        const ExactMatrix u2 = ExactMatrix::identity(dim) + e2;
        const ExactMatrix p2 = random_unimodular(rng, dim, 2 * dim);
        const ExactMatrix g2 = p2 * u2 * mat_inverse_unimodular(p2);
        rec.record(tag + ";construct-echelon2", unipotent_echelon(g2) == 2, "", matrix_input(g2));
        for (int m = 1; m <= m_max; ++m)
            rec.record(tag + ";echelon2;m=" + std::to_string(m), level2_check(g2, m),
                       "(g^m-1)^2 != 0 for echelon-2 unipotent", matrix_input(g2));

        const ExactMatrix h2 = -g2;
        const ExactMatrix hp = h2 + ExactMatrix::identity(dim);
        rec.record(tag + ";neg;plus-square", (hp * hp).is_zero(),
                   "(g+1)^2 != 0 for negated echelon-2 unipotent", matrix_input(h2));
        for (int m = 1; m <= m_max; ++m)
            rec.record(tag + ";neg;m=" + std::to_string(m),
                       level2_check(h2, m) == (m % 2 == 0),
                       "(g^m-1)^2 vanishing disagrees with the parity of m", matrix_input(h2));

        if (dim >= 3) {
            const ExactMatrix u3 =
                direct_sum(jordan_block(3), ExactMatrix::identity(dim - 3));
            const ExactMatrix p3 = random_unimodular(rng, dim, 2 * dim);
            const ExactMatrix g3 = p3 * u3 * mat_inverse_unimodular(p3);
            rec.record(tag + ";construct-echelon3", unipotent_echelon(g3) == 3, "",
                       matrix_input(g3));
            for (int m = 1; m <= m_max; ++m)
                rec.record(tag + ";echelon3;m=" + std::to_string(m), !level2_check(g3, m),
                           "(g^m-1)^2 = 0 despite echelon 3", matrix_input(g3));
            const ExactMatrix h3 = -g3;
            for (int m = 1; m <= m_max; ++m)
                rec.record(tag + ";neg-echelon3;m=" + std::to_string(m), !level2_check(h3, m),
                           "(g^m-1)^2 = 0 despite negated echelon 3", matrix_input(h3));
        }
    }
    return rec.finish();
}

SuiteReport verify_lin(int d_max, int trials, std::uint64_t seed) {
    Recorder rec("lin", seed);
    Rng rng(seed);
    for (int d = 1; d <= d_max; ++d) {
        for (int t = 0; t < trials; ++t) {
            const std::string tag = "d=" + std::to_string(d) + ";t=" + std::to_string(t);
            const ExactMatrix s = random_symplectic(rng, d, 4);
            const ExactMatrix u = s * symmetric_block_unipotent(random_symmetric(rng, d, 2)) *
                                  mat_inverse_unimodular(s);
            for (int k = 1; k <= 2 * d - 1; ++k) {
                const ExactMatrix w = wedge_power(u, k);
                const ExactMatrix n = w - ExactMatrix::identity(w.dim());
                rec.record(tag + ";lin-i;k=" + std::to_string(k),
                           mat_pow(n, k + 1).is_zero(),
                           "(wedge^k(g)-1)^(k+1) != 0 for echelon-2 symplectic g",
                           matrix_input(u));
                const bool wedge_unip = is_unipotent(w);
                const bool scaled_ok =
                    k % 2 == 1 ? is_unipotent(u) : (is_unipotent(u) || is_neg_unipotent(u));
                rec.record(tag + ";lin-iv;k=" + std::to_string(k), !wedge_unip || scaled_ok,
                           "wedge unipotent without +-unipotent base", matrix_input(u));
            }
            const ExactMatrix g = -u;
            for (int k = 2; k <= 2 * d - 1; k += 2) {
                const ExactMatrix w = wedge_power(g, k);
                const ExactMatrix n = w - ExactMatrix::identity(w.dim());
                rec.record(tag + ";lin-ii;k=" + std::to_string(k),
                           mat_pow(n, k + 1).is_zero(),
                           "(wedge^k(g)-1)^(k+1) != 0 for (g+1)^2 = 0", matrix_input(g));
                rec.record(tag + ";lin-iv-neg;k=" + std::to_string(k),
                           !is_unipotent(w) || is_neg_unipotent(g) || is_unipotent(g),
                           "wedge unipotent without +-unipotent base", matrix_input(g));
            }
        }
    }
    for (const Int ell : {Int(3), Int(5)}) {
        const InertiaRep rep = gen_example62(ell, 1);
        for (int k = 1; k <= rep.dim - 1; ++k) {
            rec.record("example62-l" + ell.str() + ";lin-iv-negative;k=" + std::to_string(k),
                       !is_unipotent(wedge_power(rep.tame, k)),
                       "wedge of a non-+-unipotent element came out unipotent",
                       rep_input(rep));
        }
    }
    return rec.finish();
}

SuiteReport verify_newlinlem(const std::vector<Int>& ells, int dim_cap) {
    Recorder rec("newlinlem", 0);
    for (const Int& ell : ells) {
        if (ell < 5 || !is_prime(ell))
            throw std::invalid_argument("verify_newlinlem: each ell must be a prime >= 5");
        const int n = (ell - 1).convert_to<int>();
        const ExactMatrix a = jordan_block(n);
        for (int r = 2; r <= n - 2; ++r) {
            if (binom(n, r) > dim_cap) continue;
            const std::string tag = "l=" + ell.str() + ";r=" + std::to_string(r);
            const ExactMatrix w = wedge_power(a, r);
            const JordanPartition part = jordan_partition_unipotent(w, ell);
            int remainder = -1;
            int full_blocks = 0;
            bool structure_ok = true;
            for (int b : part.blocks) {
                if (Int(b) == ell) {
                    ++full_blocks;
                } else if (remainder < 0) {
                    remainder = b;
                } else {
                    structure_ok = false;
                }
            }
            structure_ok = structure_ok && remainder > 0 &&
                           (remainder == 1 || Int(remainder) == ell - 1) &&
                           full_blocks == static_cast<int>(part.blocks.size()) - 1;
            std::ostringstream parts;
            for (std::size_t i = 0; i < part.blocks.size(); ++i)
                parts << (i ? "," : "") << part.blocks[i];
            rec.record(tag + ";partition", structure_ok,
                       "Jordan partition [" + parts.str() + "] is not (all ell) + one of {1, ell-1}",
                       matrix_input(a));
            if (structure_ok)
                rec.note(tag + ";remainder-block=" + std::to_string(remainder) +
                         ";partition=[" + parts.str() + "]");
            rec.record(tag + ";power-nonzero",
                       !mat_pow_is_zero_mod(w - ExactMatrix::identity(w.dim()),
                                            ell - 1, ell),
                       "(wedge^r(A)-1)^(ell-1) = 0 mod ell", matrix_input(a));
        }
    }
    return rec.finish();
}

SuiteReport verify_unip(const Int& ell, int dim, const std::vector<int>& k_list,
                        std::uint64_t seed) {
    Recorder rec("unip", seed);
    if (ell < 5 || !is_prime(ell))
        throw std::invalid_argument("verify_unip: ell must be a prime >= 5");
    const int block = (ell - 1).convert_to<int>();
    if (dim <= block) throw std::invalid_argument("verify_unip: dim must exceed ell-1");
    Rng rng(seed);
    const ExactMatrix a0 =
        direct_sum(jordan_block(block), random_unipotent_upper(rng, dim - block, 2));
    const ExactMatrix p = random_unimodular(rng, dim, 2 * dim);
    const ExactMatrix a = p * a0 * mat_inverse_unimodular(p);
    const std::string tag = "l=" + ell.str() + ";dim=" + std::to_string(dim);
    rec.record(tag + ";precondition",
               !mat_pow_is_zero_mod(a - ExactMatrix::identity(dim), ell - 2, ell),
               "(A-1)^(ell-2) = 0 mod ell; constructed block lost", matrix_input(a));
    for (int k : k_list) {
        if (k < 2 || k > dim - 2)
            throw std::invalid_argument("verify_unip: each k must satisfy 2 <= k <= dim-2");
        const ExactMatrix w = wedge_power(a, k);
        rec.record(tag + ";k=" + std::to_string(k) + ";power-nonzero",
                   !mat_pow_is_zero_mod(w - ExactMatrix::identity(w.dim()), ell - 1, ell),
                   "(wedge^k(A)-1)^(ell-1) = 0 mod ell", matrix_input(a));
    }
    return rec.finish();
}

SuiteReport verify_unipex_contrapositive(const Int& ell, int k, int m) {
    Recorder rec("unipex", 0);
    if (ell < 5 || !is_prime(ell))
        throw std::invalid_argument("verify_unipex_contrapositive: ell must be a prime >= 5");
    if (k < 2 || m < 1)
        throw std::invalid_argument("verify_unipex_contrapositive: need k >= 2, m >= 1");
    const int block = (ell - 1).convert_to<int>();
    const int dim = block + 2;
    if (k > dim - 2)
        throw std::invalid_argument("verify_unipex_contrapositive: need dim >= k+2");
    const ExactMatrix g =
        direct_sum(companion(cyclotomic_prime_power(ell, 1)), ExactMatrix::identity(2));
    const std::string tag =
        "l=" + ell.str() + ";k=" + std::to_string(k) + ";m=" + std::to_string(m);
    rec.record(tag + ";g-power-unipotent", is_unipotent(mat_pow(g, ell)),
               "g^ell is not unipotent", matrix_input(g));
    rec.record(tag + ";g-not-pm-unipotent", !is_unipotent(g) && !is_neg_unipotent(g),
               "construction degenerated to a +-unipotent element", matrix_input(g));
    const ExactMatrix w = wedge_power(g, k);
    rec.record(tag + ";wedge-not-unipotent", !is_unipotent(w),
               "wedge of the constructed g is unipotent", matrix_input(g));
    const int exponent = m * block;
    const ExactMatrix pw = mat_pow(w - ExactMatrix::identity(w.dim()), exponent);
    rec.record(tag + ";divisibility-violated", !entries_divisible(pw, int_pow(ell, m)),
               "(wedge^k(g)-1)^(m(ell-1)) is divisible by ell^m", matrix_input(g));
    return rec.finish();
}

SuiteReport verify_example_sharpness(const Int& ell, int m, int r,
                                     const std::vector<int>& k_list) {
    Recorder rec("example-sharpness", 0);
    if (!is_prime(ell)) throw std::invalid_argument("verify_example_sharpness: ell must be prime");
    if (m < 1 || r < 1)
        throw std::invalid_argument("verify_example_sharpness: m, r must be >= 1");
    const Int weight = Int(m) * (ell - 1);
    const bool allowed =
        (weight < r) || (ell == 2 && r == m) || (ell == 3 && r == 2 * m);
    if (!allowed)
        throw std::invalid_argument(
            "verify_example_sharpness: (ell, m, r) must satisfy m(ell-1) < r, or ell=2 with "
            "r=m, or ell=3 with r=2m");
    const InertiaRep rep = ell == 2 ? gen_example62_quadratic(1) : gen_example62(ell, 1);
    const Int n = int_pow(ell, m);
    const std::string tag = "l=" + ell.str() + ";m=" + std::to_string(m) + ";r=" +
                            std::to_string(r);
    for (int k : k_list) {
        if (k < 1 || k > rep.dim - 1)
            throw std::invalid_argument("verify_example_sharpness: k out of range");
        const std::string ktag = tag + ";k=" + std::to_string(k);
        const ExactMatrix mact = cohomology_action(rep.tame, k);
        const ExactMatrix pw = mat_pow(mact - ExactMatrix::identity(mact.dim()), r);
        rec.record(ktag + ";integer-divisibility", entries_divisible(pw, n),
                   "(action-1)^r not divisible by ell^m over the integers", rep_input(rep));
        const CheckResult coh = check_cohomology_criterion(rep, k, r, n, false);
        rec.record(ktag + ";closure-divisibility", coh.pass,
                   "mod-n divisibility fails over the closure", rep_input(rep));
    }
    const Classification ci = classify_integer(rep);
    rec.record(tag + ";integer-verdict", ci.verdict == Verdict::NotSemistablePattern,
               std::string("integer-mode verdict is ") + verdict_name(ci.verdict),
               rep_input(rep));
    rec.record(tag + ";fixed-space-nontrivial", !fixed_space_trivial(rep),
               "fixed space is trivial; sharpness family needs fixed vectors", rep_input(rep));
    return rec.finish();
}

std::vector<std::string> suite_names() {
    return {"level2lem", "lin", "newlinlem", "unip", "unipex", "example-sharpness"};
}

std::vector<SuiteReport> run_suite(const std::string& name, std::uint64_t seed) {
    if (name == "level2lem") return {verify_level2lem(6, 6, seed)};
    if (name == "lin") return {verify_lin(3, 100, seed)};
    if (name == "newlinlem") return {verify_newlinlem({Int(5), Int(7), Int(11)}, 300)};
    if (name == "unip")
        return {verify_unip(5, 6, {2, 3, 4}, seed), verify_unip(7, 8, {2, 3}, seed),
                verify_unip(11, 12, {2}, seed)};
    if (name == "unipex")
        return {verify_unipex_contrapositive(5, 2, 1), verify_unipex_contrapositive(5, 3, 1),
                verify_unipex_contrapositive(7, 2, 1)};
    if (name == "example-sharpness")
        return {verify_example_sharpness(3, 1, 3, {1, 2}),
                verify_example_sharpness(2, 2, 2, {1, 2}),
                verify_example_sharpness(3, 1, 2, {1, 2})};
    throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace monodromy
