#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "coalg/fixtures.hpp"
#include "coalg/format.hpp"

using namespace coalg;

TEST_CASE("parse a plain lts") {
    const System s = parse_system("system sx lts\nstate x\nstate x1\ntrans x a x1\nend\n");
    CHECK(s.name == "sx");
    CHECK(s.kind == Kind::Lts);
    CHECK(s.states == std::vector<std::string>{"x", "x1"});
    CHECK(std::get<SetBundle>(s.bundle_of("x")).arcs.count({"a", "x1"}) == 1);
    CHECK(std::get<SetBundle>(s.bundle_of("x1")).arcs.empty());
}

TEST_CASE("parse weighted multi-arcs in a pmts") {
    const System s = parse_system(
        "system pb pmts\n"
        "state y\n"
        "trans y a y p=1/2 count=2\n"
        "end\n");
    const auto& b = std::get<M1Bundle>(s.bundle_of("y"));
    CHECK(b.ms.count({Rat(1, 2), "a", "y"}) == 2);
    CHECK(b.weighted_total() == Rat(1));
}

TEST_CASE("decimals are rejected with a hint") {
    try {
        parse_system("system p pmts\nstate x\ntrans x a x p=0.5\nend\n");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(std::string(e.what()).find("decimals not accepted; write 1/2") != std::string::npos);
        CHECK(e.line() == 3);
    }
}

TEST_CASE("parser reports line and column") {
    try {
        parse_system("system s lts\nstate x\ntrans x a ghost\nend\n");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.line() == 3);
        CHECK(e.col() == 11);
        CHECK(std::string(e.what()).find("undeclared state 'ghost'") != std::string::npos);
    }
}

TEST_CASE("parser errors") {
    CHECK_THROWS_AS(parse_system(""), parse_error);
    CHECK_THROWS_AS(parse_system("system s lts\nstate x\nstate x\nend\n"), parse_error);  // dup id
    CHECK_THROWS_AS(parse_system("system s lts\nstate x\n"), parse_error);  // missing end
    CHECK_THROWS_AS(parse_system("system s lts\nend\nstate x\n"), parse_error);  // trailing
    CHECK_THROWS_AS(parse_system("system s wat\nend\n"), parse_error);  // bad kind
    CHECK_THROWS_AS(parse_system("system s lts\nstate x prob\nend\n"), parse_error);  // tag on lts
    CHECK_THROWS_AS(parse_system("system s lts\nstate x\ntrans x a x count=2\nend\n"),
                    parse_error);  // count on a set kind
    CHECK_THROWS_AS(parse_system("system s lts\nstate x\ntrans x a x p=1\nend\n"),
                    parse_error);  // p on a nondeterministic state
    CHECK_THROWS_AS(parse_system("system s pmts\nstate x\ntrans x a x\nend\n"),
                    parse_error);  // missing p
    CHECK_THROWS_AS(parse_system("system s pmts\nstate x\ntrans x a x p=1 count=0\nend\n"),
                    parse_error);  // zero count
}

TEST_CASE("validation failures are forwarded") {
    // mass 1/2 != 1
    CHECK_THROWS_AS(parse_system("system s pmts\nstate x\ntrans x a x p=1/2\nend\n"),
                    validation_error);
}

TEST_CASE("alternating polarity drives the bundle type") {
    const System s = parse_system(
        "system w alt-mts\n"
        "state n nondet\n"
        "state p prob\n"
        "trans n a p count=2\n"
        "trans p a n p=1/2 count=2\n"
        "end\n");
    CHECK(std::holds_alternative<MsBundle>(s.bundle_of("n")));
    CHECK(std::holds_alternative<M1Bundle>(s.bundle_of("p")));
    // p= on a nondet state of an alternating system is rejected
    CHECK_THROWS_AS(parse_system("system w alt-mts\nstate n nondet\ntrans n a n p=1/2\nend\n"),
                    parse_error);
}

TEST_CASE("render then parse is the identity on the bundled systems") {
    for (const System& s :
         {fixtures::sx(), fixtures::sy(), fixtures::sx_ms(2), fixtures::sy_ms(), fixtures::pa(),
          fixtures::pb(), fixtures::sxp(), fixtures::syp(), fixtures::sxp3(), fixtures::syp2(),
          fixtures::alt_small(), disjoint_union(fixtures::sxp(), fixtures::syp())}) {
        const std::string text = render_system(s);
        const System back = parse_system(text);
        CHECK(back.name == s.name);
        CHECK(back.kind == s.kind);
        CHECK(back.states == s.states);
        CHECK(back.step == s.step);
        // and rendering is a fixpoint
        CHECK(render_system(back) == text);
    }
}

TEST_CASE("render(parse(f)) == f on the file corpus") {
    namespace fs = std::filesystem;
    int checked = 0;
    for (const auto& entry : fs::directory_iterator(COALG_TESTDATA_DIR)) {
        const std::string path = entry.path().string();
        const std::string ext = entry.path().extension().string();
        if (ext != ".lts" && ext != ".mts" && ext != ".pmts" && ext != ".dts" &&
            ext != ".altmts" && ext != ".altgts")
            continue;
        std::ifstream in(path);
        std::ostringstream os;
        os << in.rdbuf();
        CHECK(render_system(parse_system(os.str())) == os.str());
        ++checked;
    }
    CHECK(checked >= 12);
}

TEST_CASE("relation and partition files") {
    const System a = fixtures::sx(), b = fixtures::sy();
    const Relation r = parse_relation("pair x y\npair x1 y1\npair x1 y2\n", a, b);
    CHECK(r.pairs.size() == 3);
    CHECK(render_relation(r) == "pair x y\npair x1 y1\npair x1 y2\n");
    CHECK_THROWS_AS(parse_relation("pair x zz\n", a, b), validation_error);
    CHECK_THROWS_AS(parse_relation("pear x y\n", a, b), parse_error);

    const Partition p = parse_partition("class x\nclass x1\n", a.state_set());
    CHECK(p.classes.size() == 2);
    CHECK(render_partition(p) == "class x\nclass x1\n");
    CHECK_THROWS_AS(parse_partition("class x\n", a.state_set()), validation_error);  // x1 missing
}

TEST_CASE("order files build a validated extensional order") {
    const System a = fixtures::sx_ms(1), b = fixtures::sy_ms();
    const OrderSpec ord = parse_order_file("le 1:x1 1:x\n", a, b);
    CHECK(order_holds(ord, a.bundle_of("x1"), a.bundle_of("x")));
    CHECK(order_holds(ord, a.bundle_of("x"), a.bundle_of("x")));  // implicit reflexivity
    CHECK(!order_holds(ord, a.bundle_of("x"), a.bundle_of("x1")));
    CHECK_THROWS_AS(parse_order_file("le 1:zz 1:x\n", a, b), parse_error);
    CHECK_THROWS_AS(parse_order_file("le 3:x 1:x\n", a, b), parse_error);
}
