#include "monodromy/inertia.hpp"

#include "monodromy/serialize.hpp"
#include "monodromy/verify.hpp"

#include <doctest.h>

using monodromy::CoefficientMode;
using monodromy::ExactMatrix;
using monodromy::InertiaRep;
using monodromy::Int;
using monodromy::Verdict;

namespace {

ExactMatrix m(std::vector<std::vector<long long>> rows) {
    std::vector<std::vector<Int>> out;
    for (const auto& r : rows) {
        std::vector<Int> row(r.begin(), r.end());
        out.push_back(std::move(row));
    }
    return ExactMatrix::from_rows(out);
}

InertiaRep residue_rep(ExactMatrix tame, const Int& n) {
    InertiaRep rep;
    rep.dim = tame.dim();
    rep.mode = CoefficientMode::Residue;
    rep.modulus = n;
    rep.tame = std::move(tame);
    rep.label = "test-residue";
    return rep;
}

}  // namespace

TEST_CASE("validation rejects malformed representations") {
    InertiaRep rep = monodromy::gen_semistable_family(2, 1);
    CHECK_NOTHROW(rep.validate());

    InertiaRep odd = rep;
    odd.dim = 3;
    CHECK_THROWS_AS(odd.validate(), std::invalid_argument);

    InertiaRep bad_ell = rep;
    bad_ell.ell = 6;
    CHECK_THROWS_AS(bad_ell.validate(), std::invalid_argument);

    InertiaRep bad_det = rep;
    bad_det.form.reset();
    bad_det.tame = m({{7, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
    CHECK_THROWS_AS(bad_det.validate(), std::invalid_argument);  // det divisible by ell = 7

    InertiaRep not_qu = rep;
    not_qu.form.reset();
    not_qu.tame = m({{2, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
    CHECK_THROWS_AS(not_qu.validate(), std::invalid_argument);  // eigenvalue 2

    InertiaRep bad_form = rep;
    bad_form.form = ExactMatrix::identity(4);
    CHECK_THROWS_AS(bad_form.validate(), std::invalid_argument);  // not antisymmetric

    // Lower-left block [[0,1],[0,0]] is not symmetric, so the form is broken.
    InertiaRep unpreserved = rep;
    unpreserved.tame = m({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 0, 1}});
    CHECK_THROWS_AS(unpreserved.validate(), std::invalid_argument);

    InertiaRep res = residue_rep(m({{1, 2}, {2, 1}}), Int(6));  // det = -3
    CHECK_THROWS_AS(res.validate(), std::invalid_argument);
    res.modulus = 7;
    CHECK_NOTHROW(res.validate());

    CHECK(rep.generator_words() == std::vector<std::string>{"t"});
    REQUIRE(rep.generators().size() == 1);
    CHECK(rep.generators()[0] == rep.tame);
}

TEST_CASE("group closure enumeration") {
    const auto trivial =
        monodromy::group_closure(residue_rep(ExactMatrix::identity(2), Int(5)), Int(5), 100);
    REQUIRE(trivial.size() == 1);
    CHECK(trivial[0].word == "e");
    CHECK(trivial[0].mat.is_identity());

    const auto order2 =
        monodromy::group_closure(residue_rep(-ExactMatrix::identity(2), Int(5)), Int(5), 100);
    CHECK(order2.size() == 2);
    CHECK(order2[1].word == "t");

    const ExactMatrix c5 = m({{0, 0, 0, -1}, {1, 0, 0, -1}, {0, 1, 0, -1}, {0, 0, 1, -1}});
    const auto cyc = monodromy::group_closure(residue_rep(c5, Int(7)), Int(7), 100);
    REQUIRE(cyc.size() == 5);
    CHECK(cyc[0].word == "e");
    CHECK(cyc[1].word == "t");
    CHECK(cyc[2].word == "t.t");
    CHECK(cyc[4].word == "t.t.t.t");

    CHECK_THROWS_AS(monodromy::group_closure(residue_rep(c5, Int(7)), Int(7), 3),
                    monodromy::ResourceCapError);
    try {
        monodromy::group_closure(residue_rep(c5, Int(7)), Int(7), 3);
    } catch (const monodromy::ResourceCapError& e) {
        CHECK(std::string(e.what()).find("increase cap") != std::string::npos);
    }

    CHECK_THROWS_AS(
        monodromy::group_closure(residue_rep(m({{1, 2}, {2, 1}}), Int(6)), Int(6), 100),
        std::invalid_argument);
    CHECK_THROWS_AS(
        monodromy::group_closure(residue_rep(ExactMatrix::identity(2), Int(5)), Int(1), 100),
        std::invalid_argument);

    // Two generators: words report the breadth-first discovery path.
    InertiaRep two = residue_rep(-ExactMatrix::identity(2), Int(5));
    two.wild.push_back(m({{0, 1}, {4, 0}}));
    const auto closure = monodromy::group_closure(two, Int(5), 100);
    CHECK(closure.size() == 4);  // {I, -I, w, -w} mod 5
    CHECK(closure[2].word == "w1");
}

TEST_CASE("integer-mode pattern tests") {
    const InertiaRep ss = monodromy::gen_semistable_family(2, 3);
    const InertiaRep bu = monodromy::gen_briefly_unstable_family(2, 3);
    const InertiaRep ex = monodromy::gen_example62(Int(3), 1);

    CHECK(monodromy::check_tate_criterion(ss).pass);
    CHECK_FALSE(monodromy::check_tate_criterion(bu).pass);
    CHECK_FALSE(monodromy::check_tate_criterion(ex).pass);

    CHECK(monodromy::check_pm_unipotent(ss).pass);
    CHECK(monodromy::check_pm_unipotent(bu).pass);
    CHECK_FALSE(monodromy::check_pm_unipotent(ex).pass);

    CHECK_FALSE(monodromy::fixed_space_trivial(ss));
    CHECK(monodromy::fixed_space_trivial(bu));
    CHECK_FALSE(monodromy::fixed_space_trivial(ex));
    CHECK(monodromy::fixed_space_trivial(bu, Int(3)));
    CHECK_THROWS_AS(monodromy::fixed_space_trivial(bu, Int(6)), std::invalid_argument);

    const auto tate_ev = monodromy::check_tate_criterion(ss).evidence;
    REQUIRE(tate_ev.size() == 1);  // only the tame generator, no wild part
    CHECK(tate_ev[0].word == "t");
    CHECK(tate_ev[0].test == "square-vanishing");
    CHECK(tate_ev[0].pass);

    CHECK_THROWS_AS(monodromy::check_tate_criterion(residue_rep(ExactMatrix::identity(2), Int(5))),
                    std::invalid_argument);
}

TEST_CASE("cohomology divisibility over the closure") {
    const InertiaRep ex = monodromy::gen_example62(Int(3), 1);

    // At the exceptional modulus 3 the criterion is blind: everything passes.
    const auto blind = monodromy::check_cohomology_criterion(ex, 1, 3, Int(3), false);
    CHECK(blind.pass);
    CHECK(blind.evidence.size() == 3);  // closure of an order-3 cyclic group
    for (const auto& e : blind.evidence) {
        CHECK(e.test == "divisibility-unsigned");
        CHECK(e.pass);
    }

    // At n = 7 the same representation fails, signed or not.
    CHECK_FALSE(monodromy::check_cohomology_criterion(ex, 1, 3, Int(7), false).pass);
    const auto sg = monodromy::check_cohomology_criterion(ex, 1, 3, Int(7), true);
    CHECK_FALSE(sg.pass);
    bool saw_signed = false;
    for (const auto& e : sg.evidence) saw_signed = saw_signed || e.test == "divisibility-signed";
    CHECK(saw_signed);

    const InertiaRep ss = monodromy::gen_semistable_family(2, 3);
    CHECK(monodromy::check_cohomology_criterion(ss, 1, 2, Int(7), false).pass);

    CHECK_THROWS_AS(monodromy::check_cohomology_criterion(ex, 0, 3, Int(7), false),
                    std::invalid_argument);
    CHECK_THROWS_AS(monodromy::check_cohomology_criterion(ex, 4, 3, Int(7), false),
                    std::invalid_argument);
}

TEST_CASE("integer-mode classification") {
    const auto ss = monodromy::classify_integer(monodromy::gen_semistable_family(2, 3));
    CHECK(ss.verdict == Verdict::SemistablePattern);
    CHECK(ss.theorem == "square-vanishing");

    const auto bu = monodromy::classify_integer(monodromy::gen_briefly_unstable_family(2, 3));
    CHECK(bu.verdict == Verdict::BrieflyUnstablePattern);
    CHECK(bu.theorem == "pm-unipotent+trivial-fixed-space");
    CHECK(bu.reason.find("caveat") != std::string::npos);

    const auto ex = monodromy::classify_integer(monodromy::gen_example62(Int(3), 1));
    CHECK(ex.verdict == Verdict::NotSemistablePattern);
    CHECK(ex.theorem == "integer-pattern-tests");
    CHECK(ex.reason.find("no symplectic form") != std::string::npos);
}

TEST_CASE("full classification decision table") {
    const InertiaRep ss = monodromy::gen_semistable_family(2, 3);
    const InertiaRep bu = monodromy::gen_briefly_unstable_family(2, 3);
    const InertiaRep ex = monodromy::gen_example62(Int(3), 1);

    const auto c1 = monodromy::classify(ss, 1, 2, Int(7));
    CHECK(c1.verdict == Verdict::SemistablePattern);
    CHECK(c1.theorem == "odd-k-unsigned-divisibility");

    const auto c2 = monodromy::classify(ex, 1, 3, Int(3));
    CHECK(c2.verdict == Verdict::Indeterminate);
    CHECK(c2.theorem == "exceptional-modulus");
    CHECK(c2.reason.find("N(3)") != std::string::npos);

    const auto c3 = monodromy::classify(ex, 1, 3, Int(7));
    CHECK(c3.verdict == Verdict::NotSemistablePattern);
    CHECK(c3.theorem == "divisibility-failure");

    const auto c4 = monodromy::classify(bu, 1, 2, Int(7));
    CHECK(c4.verdict == Verdict::BrieflyUnstablePattern);
    CHECK(c4.theorem == "odd-k-signed-divisibility+integer-confirmation");
    CHECK(c4.reason.find("caveat") != std::string::npos);

    const auto c5 = monodromy::classify(bu, 2, 3, Int(7));
    CHECK(c5.verdict == Verdict::BrieflyUnstablePattern);
    CHECK(c5.theorem == "even-k-divisibility+pm-unipotent");

    const auto c6 = monodromy::classify(ss, 2, 3, Int(7));
    CHECK(c6.verdict == Verdict::SemistablePattern);
    CHECK(c6.theorem == "even-k-divisibility+square-vanishing");

    // Residue-mode data cannot separate signs at even wedge degree.
    InertiaRep res = residue_rep(bu.tame.reduced_mod(Int(7)), Int(7));
    res.validate();
    const auto c7 = monodromy::classify(res, 2, 3, Int(7));
    CHECK(c7.verdict == Verdict::Indeterminate);
    CHECK(c7.theorem == "even-k-sign-ambiguity");

    const auto c8 = monodromy::classify(res, 1, 2, Int(7));
    CHECK(c8.verdict == Verdict::BrieflyUnstablePattern);
    CHECK(c8.theorem == "odd-k-signed-divisibility");

    // The window set depends on the wedge degree: at k = 3 and r = 4 the
    // borderline modulus 5 is decidable, at k = 1 it is not.
    const InertiaRep ss6 = monodromy::gen_semistable_family(3, 3);
    CHECK(monodromy::classify(ss6, 3, 4, Int(5)).verdict == Verdict::SemistablePattern);
    const auto edge = monodromy::classify(ss6, 1, 4, Int(5));
    CHECK(edge.verdict == Verdict::Indeterminate);
    CHECK(edge.reason.find("N(4)") != std::string::npos);
}

TEST_CASE("classification preconditions name the violation") {
    const InertiaRep ss = monodromy::gen_semistable_family(2, 3);
    CHECK_THROWS_AS(monodromy::classify(ss, 0, 2, Int(7)), std::invalid_argument);
    CHECK_THROWS_AS(monodromy::classify(ss, 4, 5, Int(7)), std::invalid_argument);
    CHECK_THROWS_AS(monodromy::classify(ss, 2, 2, Int(7)), std::invalid_argument);
    CHECK_THROWS_AS(monodromy::classify(ss, 1, 2, Int(0)), std::invalid_argument);

    InertiaRep res = residue_rep(ss.tame.reduced_mod(Int(7)), Int(7));
    CHECK_THROWS_AS(monodromy::classify(res, 1, 2, Int(5)), std::invalid_argument);

    try {
        monodromy::classify(ss, 2, 2, Int(7));
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("k < r") != std::string::npos);
    }
}

TEST_CASE("classification output is deterministic") {
    const InertiaRep bu = monodromy::gen_briefly_unstable_family(2, 9);
    const auto a = monodromy::classify(bu, 1, 2, Int(7));
    const auto b = monodromy::classify(bu, 1, 2, Int(7));
    CHECK(monodromy::canonical_dump(monodromy::classification_to_json(a)) ==
          monodromy::canonical_dump(monodromy::classification_to_json(b)));
}
