#include "coalg/fixtures.hpp"

namespace coalg::fixtures {

System sx() {
    System s;
    s.name = "sx";
    s.kind = Kind::Lts;
    s.states = {"x", "x1"};
    s.labels = {"a"};
    SetBundle bx;
    bx.arcs.insert({"a", "x1"});
    s.step.emplace("x", bx);
    s.step.emplace("x1", SetBundle{});
    return s;
}

System sy() {
    System s;
    s.name = "sy";
    s.kind = Kind::Lts;
    s.states = {"y", "y1", "y2"};
    s.labels = {"a"};
    SetBundle by;
    by.arcs.insert({"a", "y1"});
    by.arcs.insert({"a", "y2"});
    s.step.emplace("y", by);
    s.step.emplace("y1", SetBundle{});
    s.step.emplace("y2", SetBundle{});
    return s;
}

System sx_ms(std::int64_t k) {
    System s;
    s.name = "sx" + std::to_string(k);
    s.kind = Kind::Mts;
    s.states = {"x", "x1"};
    s.labels = {"a"};
    MsBundle bx;
    bx.ms.add({"a", "x1"}, k);
    s.step.emplace("x", bx);
    s.step.emplace("x1", MsBundle{});
    return s;
}

System sy_ms() {
    System s;
    s.name = "sy1";
    s.kind = Kind::Mts;
    s.states = {"y", "y1", "y2"};
    s.labels = {"a"};
    MsBundle by;
    by.ms.add({"a", "y1"}, 1);
    by.ms.add({"a", "y2"}, 1);
    s.step.emplace("y", by);
    s.step.emplace("y1", MsBundle{});
    s.step.emplace("y2", MsBundle{});
    return s;
}

System pa() {
    System s;
    s.name = "pa";
    s.kind = Kind::Pmts;
    s.states = {"x"};
    s.labels = {"a"};
    M1Bundle bx;
    bx.ms.add({Rat(1), "a", "x"}, 1);
    s.step.emplace("x", bx);
    return s;
}

System pb() {
    System s;
    s.name = "pb";
    s.kind = Kind::Pmts;
    s.states = {"y"};
    s.labels = {"a"};
    M1Bundle by;
    by.ms.add({Rat(1, 2), "a", "y"}, 2);
    s.step.emplace("y", by);
    return s;
}

System sxp() {
    System s;
    s.name = "sxp";
    s.kind = Kind::Pmts;
    s.states = {"x", "x1", "x2"};
    s.labels = {"a"};
    M1Bundle bx;
    bx.ms.add({Rat(1, 2), "a", "x1"}, 1);
    bx.ms.add({Rat(1, 2), "a", "x2"}, 1);
    s.step.emplace("x", bx);
    s.step.emplace("x1", M1Bundle{});
    s.step.emplace("x2", M1Bundle{});
    return s;
}

System syp() {
    System s;
    s.name = "syp";
    s.kind = Kind::Pmts;
    s.states = {"y", "y1", "y2", "y3"};
    s.labels = {"a"};
    M1Bundle by;
    by.ms.add({Rat(1, 3), "a", "y1"}, 1);
    by.ms.add({Rat(1, 3), "a", "y2"}, 1);
    by.ms.add({Rat(1, 3), "a", "y3"}, 1);
    s.step.emplace("y", by);
    s.step.emplace("y1", M1Bundle{});
    s.step.emplace("y2", M1Bundle{});
    s.step.emplace("y3", M1Bundle{});
    return s;
}

System sxp3() {
    System s = sxp();
    s.name = "sxp3";
    M1Bundle bx;
    bx.ms.add({Rat(1, 6), "a", "x1"}, 3);
    bx.ms.add({Rat(1, 6), "a", "x2"}, 3);
    s.step["x"] = bx;
    return s;
}

System syp2() {
    System s = syp();
    s.name = "syp2";
    M1Bundle by;
    by.ms.add({Rat(1, 6), "a", "y1"}, 2);
    by.ms.add({Rat(1, 6), "a", "y2"}, 2);
    by.ms.add({Rat(1, 6), "a", "y3"}, 2);
    s.step["y"] = by;
    return s;
}

System alt_small() {
    System s;
    s.name = "alt";
    s.kind = Kind::AltMts;
    s.states = {"n", "p"};
    s.labels = {"a"};
    MsBundle bn;
    bn.ms.add({"a", "p"}, 2);
    s.step.emplace("n", bn);
    M1Bundle bp;
    bp.ms.add({Rat(1, 2), "a", "n"}, 2);
    s.step.emplace("p", bp);
    return s;
}

Relation rel_main(const System& left, const System& right) {
    Relation r;
    r.left_carrier = left.state_set();
    r.right_carrier = right.state_set();
    r.pairs = {{"x", "y"}, {"x1", "y1"}, {"x1", "y2"}};
    return r;
}

Relation rel_branching(const System& left, const System& right) {
    Relation r;
    r.left_carrier = left.state_set();
    r.right_carrier = right.state_set();
    r.pairs.insert({"x", "y"});
    for (const std::string l : {"x1", "x2"})
        for (const std::string rr : {"y1", "y2", "y3"}) r.pairs.insert({l, rr});
    return r;
}

}  // namespace coalg::fixtures
