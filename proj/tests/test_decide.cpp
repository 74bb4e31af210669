#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "katop/decide.hpp"
#include "katop/errors.hpp"
#include "katop/relmodel.hpp"
#include "support.hpp"

using namespace katop;
using katop::testing::ex;
using katop::testing::gs;

namespace {

const char* kStarLhs = "(aaa)*";
const char* kStarRhs = "(aaa)*;top;(aa)* + (aa)*;a;top;(aaa)*";

// Under KAT every string strictly before the witness is treated alike by both
// sides, checked against bounded denotations.
void check_minimal_kat_witness(const Expr& e, const Expr& f, const Verdict& v, const Alphabet& al) {
    REQUIRE(v.witness);
    const auto& w = *v.witness;
    auto de = denote_bounded(e, w.length(), al), df = denote_bounded(f, w.length(), al);
    CHECK(de.contains(w) != df.contains(w));
    CHECK(de.contains(w) == (v.holder == Side::Left));
    for (const auto& u : all_guarded_strings(al, w.length())) {
        if (!(u < w)) break;
        CHECK(de.contains(u) == df.contains(u));
    }
}

}  // namespace

TEST_CASE("theory names") {
    CHECK(parse_theory("katf") == Theory::KAT_F);
    CHECK(parse_theory("KATT") == Theory::KAT_T);
    CHECK(parse_theory("kat") == Theory::KAT);
    CHECK_FALSE(parse_theory("rel").has_value());
}

TEST_CASE("decide examples") {
    auto al = Alphabet::single_atom({"a", "b"});
    CHECK(decide(ex("a + top", al), Expr::top(), Theory::KAT_T, al).equal);

    auto l = ex("top;a;top;b;top", al), r = ex("top;b;top;a;top", al);
    CHECK(decide(l, r, Theory::KAT_F, al).equal);
    CHECK_FALSE(decide(l, r, Theory::KAT_T, al).equal);

    CHECK(decide(ex("top;a;top;a", al), ex("top;a", al), Theory::KAT_F, al).equal);

    auto f = ex("a;top;a", al);
    CHECK(decide(ex("a + a;top;a", al), f, Theory::KAT_F, al).equal);
    auto t = decide(ex("a + a;top;a", al), f, Theory::KAT_T, al);
    REQUIRE_FALSE(t.equal);
    CHECK(t.witness == gs("alpha a alpha", al));
    CHECK(t.holder == Side::Left);

    for (auto th : {Theory::KAT_T, Theory::KAT_F}) {
        auto v = decide(ex("(a+b)*", al), Expr::top(), th, al);
        REQUIRE_FALSE(v.equal);
        CHECK(v.witness == gs("alpha T alpha", al));
        CHECK(v.holder == Side::Right);
    }
}

TEST_CASE("the axiom instance a <= a;top;a separates the theories") {
    auto two = Alphabet::make({"a"}, {"alpha", "beta"});
    auto t = decide(ex("a + a;top;a", two), ex("a;top;a", two), Theory::KAT_T, two);
    REQUIRE_FALSE(t.equal);
    CHECK(t.witness == gs("alpha a alpha", two));
    CHECK(leq(ex("a", two), ex("a;top;a", two), Theory::KAT_F, two).equal);
}

TEST_CASE("leq examples") {
    auto al = Alphabet::single_atom({"a", "b"});
    CHECK(leq(ex(kStarLhs, al), ex(kStarRhs, al), Theory::KAT_F, al).equal);

    auto lhs = ex("b;(aaa)*;b", al);
    auto rhs = ex("b;((aaa)*;b;top;b;(aa)* + (aa)*;a;b;top;b;(aaa)*);b", al);
    CHECK(leq(lhs, rhs, Theory::KAT_F, al).equal);
    auto t = leq(lhs, rhs, Theory::KAT_T, al);
    REQUIRE_FALSE(t.equal);
    CHECK(t.witness == gs("b b", al));
    REQUIRE(t.countermodel);
    CHECK_FALSE(t.countermodel->relational);
    CHECK(t.countermodel->left_holds);
    CHECK_FALSE(t.countermodel->right_holds);

    for (const auto& text : katop::testing::corpus()) {
        CHECK(leq(ex(text, al), Expr::top(), Theory::KAT_T, al).equal);
        CHECK(leq(ex(text, al), Expr::top(), Theory::KAT_F, al).equal);
    }
}

TEST_CASE("membership examples") {
    auto al = Alphabet::single_atom({"a"});
    auto rhs = ex(kStarRhs, al);
    // The closed language of the right-hand side contains ⊤ itself (take the
    // empty powers), so every string is a member after closure.
    CHECK(member(rhs, gs("a a a", al), Theory::KAT_F, al));
    CHECK(member(rhs, gs("a a a a", al), Theory::KAT_F, al));
    CHECK(member(rhs, gs("T", al), Theory::KAT, al));
    CHECK_FALSE(member(rhs, gs("a a a", al), Theory::KAT, al));

    CHECK_FALSE(member(ex("a", al), gs("T", al), Theory::KAT_T, al));
    for (const auto& u : all_guarded_strings(al, 4)) CHECK(member(Expr::top(), u, Theory::KAT_T, al));
}

TEST_CASE("witnesses are shortest and carry checked certificates") {
    auto al = Alphabet::make({"a", "b"}, {"alpha", "beta"});
    katop::testing::ExprGen gen(2718, al, true);
    int separated = 0;
    for (int i = 0; i < 120; ++i) {
        auto e = gen(1 + i % 8), f = gen(1 + (i * 7) % 8);
        for (auto th : {Theory::KAT, Theory::KAT_T, Theory::KAT_F}) {
            auto v = decide(e, f, th, al);
            if (v.equal) continue;
            ++separated;
            REQUIRE(v.witness);
            REQUIRE(v.countermodel);
            const auto& c = *v.countermodel;
            CHECK(c.relational == (th == Theory::KAT_F));
            CHECK(c.left_holds == (v.holder == Side::Left));
            CHECK(c.right_holds != c.left_holds);
            CHECK(member(e, *v.witness, th, al) == (v.holder == Side::Left));
            CHECK(member(f, *v.witness, th, al) == (v.holder == Side::Right));
            if (th == Theory::KAT) check_minimal_kat_witness(e, f, v, al);
            for (const auto& u : all_guarded_strings(al, v.witness->length())) {
                if (!(u < *v.witness)) break;
                CHECK(member(e, u, th, al) == member(f, u, th, al));
            }
        }
    }
    CHECK(separated > 50);
}

TEST_CASE("relational countermodels refute the equation") {
    auto al = Alphabet::make({"a", "b"}, {"alpha", "beta"});
    katop::testing::ExprGen gen(99, al, true);
    for (int i = 0; i < 80; ++i) {
        auto e = gen(2 + i % 7), f = gen(2 + (i * 3) % 7);
        auto v = decide(e, f, Theory::KAT_F, al);
        if (v.equal) continue;
        const auto& c = *v.countermodel;
        CHECK(eval(e, c.model, al).get(c.source, c.target) == c.left_holds);
        CHECK(eval(f, c.model, al).get(c.source, c.target) == c.right_holds);
    }
}

TEST_CASE("theories only grow") {
    auto al = katop::testing::corpus_alphabet();
    const auto& texts = katop::testing::corpus();
    for (std::size_t i = 0; i < texts.size(); ++i)
        for (std::size_t j = i; j < texts.size(); ++j) {
            auto e = ex(texts[i], al), f = ex(texts[j], al);
            bool kat = decide(e, f, Theory::KAT, al).equal;
            bool katt = decide(e, f, Theory::KAT_T, al).equal;
            bool katf = decide(e, f, Theory::KAT_F, al).equal;
            CHECK((!kat || katt));
            CHECK((!katt || katf));
        }
}

TEST_CASE("top-free equations get the same verdict in every theory") {
    auto al = Alphabet::make({"a", "b"}, {"alpha", "beta"});
    katop::testing::ExprGen gen(5, al, false);
    for (int i = 0; i < 100; ++i) {
        auto e = gen(1 + i % 8), f = gen(1 + (i * 5) % 8);
        auto k = decide(e, f, Theory::KAT, al);
        auto t = decide(e, f, Theory::KAT_T, al);
        auto r = decide(e, f, Theory::KAT_F, al);
        CHECK(k.equal == t.equal);
        CHECK(k.equal == r.equal);
        CHECK(k.witness == t.witness);
        CHECK(k.witness == r.witness);
    }
    auto one = Alphabet::single_atom({"a", "b"});
    CHECK(decide(ex("(a+b)*", one), ex("(a*;b)*;a*", one), Theory::KAT, one).equal);
}

TEST_CASE("visited cap") {
    auto al = Alphabet::single_atom({"a"});
    CHECK_THROWS_AS(decide(ex(kStarLhs, al), ex("(aa)*", al), Theory::KAT, al, {2}), ResourceLimit);
    try {
        decide(ex(kStarLhs, al), ex(kStarLhs, al), Theory::KAT_F, al, {1});
        FAIL("expected the cap to trip");
    } catch (const ResourceLimit& e) {
        CHECK(e.cap() == 1);
        CHECK(std::string(e.what()).rfind("inconclusive", 0) == 0);
    }
    auto v = decide(ex(kStarLhs, al), ex(kStarLhs, al), Theory::KAT_F, al);
    CHECK(v.equal);
    CHECK(v.stats.visited > 1);
}

TEST_CASE("alphabet mismatch") {
    auto al = Alphabet::single_atom({"a"});
    CHECK_THROWS_AS(decide(Expr::letter("a"), Expr::letter("b"), Theory::KAT, al), AlphabetError);
}
