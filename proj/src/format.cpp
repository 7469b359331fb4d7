#include "coalg/format.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace coalg {

std::string validation_error::join(const std::vector<std::string>& v) {
    std::string s = "validation failed";
    for (const auto& d : v) s += "\n  " + d;
    return s;
}

namespace {

struct Token {
    std::string text;
    int line;
    int col;
};

// Tokens per line, comments stripped, blank lines skipped.
std::vector<std::vector<Token>> tokenize(const std::string& text) {
    std::vector<std::vector<Token>> lines;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const std::size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::vector<Token> toks;
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
            if (i >= raw.size()) break;
            const std::size_t start = i;
            while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
            toks.push_back({raw.substr(start, i - start), lineno, static_cast<int>(start + 1)});
        }
        if (!toks.empty()) lines.push_back(std::move(toks));
    }
    return lines;
}

std::int64_t parse_int(const Token& t) {
    try {
        std::size_t used = 0;
        const std::int64_t v = std::stoll(t.text, &used);
        if (used != t.text.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw parse_error(t.line, t.col, "expected an integer, got '" + t.text + "'");
    }
}

Rat parse_rat_token(const Token& t) {
    if (t.text.find('.') != std::string::npos)
        throw parse_error(t.line, t.col, "decimals not accepted; write 1/2");
    const std::size_t slash = t.text.find('/');
    try {
        if (slash == std::string::npos) return Rat(parse_int(t));
        Token num{t.text.substr(0, slash), t.line, t.col};
        Token den{t.text.substr(slash + 1), t.line, t.col + static_cast<int>(slash) + 1};
        return Rat(parse_int(num), parse_int(den));
    } catch (const parse_error&) {
        throw;
    } catch (const std::exception& e) {
        throw parse_error(t.line, t.col, std::string("bad rational '") + t.text + "': " + e.what());
    }
}

}  // namespace

Rat parse_rat(const std::string& text) { return parse_rat_token({text, 1, 1}); }

System parse_system(const std::string& text) {
    const auto lines = tokenize(text);
    if (lines.empty()) throw parse_error(1, 1, "empty input; expected a system declaration");

    System sys;
    std::map<std::string, bool> prob_state;  // polarity per state
    bool header_seen = false, end_seen = false;

    for (const auto& toks : lines) {
        const Token& head = toks.front();
        if (end_seen) throw parse_error(head.line, head.col, "content after 'end'");
        if (!header_seen) {
            if (head.text != "system")
                throw parse_error(head.line, head.col, "expected 'system <name> <kind>'");
            if (toks.size() != 3)
                throw parse_error(head.line, head.col, "expected 'system <name> <kind>'");
            sys.name = toks[1].text;
            const auto k = kind_from_name(toks[2].text);
            if (!k)
                throw parse_error(toks[2].line, toks[2].col,
                                  "unknown system kind '" + toks[2].text + "'");
            sys.kind = *k;
            header_seen = true;
            continue;
        }
        if (head.text == "end") {
            if (toks.size() != 1) throw parse_error(toks[1].line, toks[1].col, "junk after 'end'");
            end_seen = true;
            continue;
        }
        if (head.text == "state") {
            if (toks.size() < 2 || toks.size() > 3)
                throw parse_error(head.line, head.col, "expected 'state <id> [nondet|prob]'");
            const std::string& id = toks[1].text;
            if (prob_state.count(id))
                throw parse_error(toks[1].line, toks[1].col, "duplicate state id '" + id + "'");
            bool prob;
            const bool alt = sys.kind == Kind::AltMts || sys.kind == Kind::AltGts;
            if (toks.size() == 3) {
                if (!alt)
                    throw parse_error(toks[2].line, toks[2].col,
                                      "polarity tags are only for alternating kinds");
                if (toks[2].text == "nondet") prob = false;
                else if (toks[2].text == "prob") prob = true;
                else
                    throw parse_error(toks[2].line, toks[2].col,
                                      "expected 'nondet' or 'prob', got '" + toks[2].text + "'");
            } else {
                // untagged alternating states default to nondeterministic
                prob = sys.kind == Kind::Pmts || sys.kind == Kind::Dts;
            }
            prob_state[id] = prob;
            sys.states.push_back(id);
            switch (sys.kind) {
                case Kind::Lts: sys.step.emplace(id, SetBundle{}); break;
                case Kind::Mts: sys.step.emplace(id, MsBundle{}); break;
                case Kind::Pmts: sys.step.emplace(id, M1Bundle{}); break;
                case Kind::Dts: sys.step.emplace(id, DistBundle{}); break;
                case Kind::AltMts:
                    sys.step.emplace(id, prob ? Bundle(M1Bundle{}) : Bundle(MsBundle{}));
                    break;
                case Kind::AltGts:
                    sys.step.emplace(id, prob ? Bundle(DistBundle{}) : Bundle(SetBundle{}));
                    break;
            }
            continue;
        }
        if (head.text == "trans") {
            if (toks.size() < 4)
                throw parse_error(head.line, head.col,
                                  "expected 'trans <src> <label> <tgt> [count=..] [p=..]'");
            const Token &src = toks[1], &label = toks[2], &tgt = toks[3];
            if (!prob_state.count(src.text))
                throw parse_error(src.line, src.col, "undeclared state '" + src.text + "'");
            if (!prob_state.count(tgt.text))
                throw parse_error(tgt.line, tgt.col, "undeclared state '" + tgt.text + "'");
            std::int64_t count = 1;
            std::optional<Rat> p;
            for (std::size_t i = 4; i < toks.size(); ++i) {
                const Token& t = toks[i];
                if (t.text.rfind("count=", 0) == 0) {
                    count = parse_int({t.text.substr(6), t.line, t.col + 6});
                    if (count < 1) throw parse_error(t.line, t.col, "count must be positive");
                } else if (t.text.rfind("p=", 0) == 0) {
                    p = parse_rat_token({t.text.substr(2), t.line, t.col + 2});
                    if (*p < Rat(0)) throw parse_error(t.line, t.col, "probability must be >= 0");
                } else {
                    throw parse_error(t.line, t.col, "unknown option '" + t.text + "'");
                }
            }
            const bool prob = prob_state.at(src.text);
            if (prob && !p)
                throw parse_error(head.line, head.col,
                                  "state '" + src.text + "' is probabilistic; p=<num>/<den> required");
            if (!prob && p)
                throw parse_error(head.line, head.col,
                                  "state '" + src.text + "' is not probabilistic; p= not allowed");
            Bundle& b = sys.step.at(src.text);
            if (auto* sb = std::get_if<SetBundle>(&b)) {
                if (count != 1)
                    throw parse_error(head.line, head.col,
                                      "count is only meaningful for multiset kinds");
                sb->arcs.insert({label.text, tgt.text});
            } else if (auto* mb = std::get_if<MsBundle>(&b)) {
                mb->ms.add({label.text, tgt.text}, count);
            } else if (auto* pb = std::get_if<M1Bundle>(&b)) {
                pb->ms.add({*p, label.text, tgt.text}, count);
            } else {
                auto* db = std::get_if<DistBundle>(&b);
                if (count != 1)
                    throw parse_error(head.line, head.col,
                                      "count is only meaningful for multiset kinds");
                if (p->is_zero())
                    throw parse_error(head.line, head.col,
                                      "zero mass is not representable; omit the transition");
                db->dist.add({label.text, tgt.text}, *p);
            }
            sys.labels.insert(label.text);
            continue;
        }
        throw parse_error(head.line, head.col, "unknown declaration '" + head.text + "'");
    }
    if (!end_seen) {
        const Token& last = lines.back().back();
        throw parse_error(last.line, last.col, "missing 'end'");
    }
    auto diags = validate_system(sys);
    if (!diags.empty()) throw validation_error(std::move(diags));
    return sys;
}

namespace {

bool is_prob_bundle_state(const Bundle& b) { return bundle_is_prob(b); }

void render_bundle_lines(std::ostream& os, const std::string& src, const Bundle& b) {
    std::visit(
        [&](const auto& bb) {
            using T = std::decay_t<decltype(bb)>;
            if constexpr (std::is_same_v<T, SetBundle>) {
                for (const auto& a : bb.arcs)
                    os << "trans " << src << " " << a.label << " " << a.target << "\n";
            } else if constexpr (std::is_same_v<T, MsBundle>) {
                for (const auto& [a, n] : bb.ms.entries()) {
                    os << "trans " << src << " " << a.label << " " << a.target;
                    if (n != 1) os << " count=" << n;
                    os << "\n";
                }
            } else if constexpr (std::is_same_v<T, M1Bundle>) {
                for (const auto& [wa, n] : bb.ms.entries()) {
                    os << "trans " << src << " " << wa.label << " " << wa.target;
                    if (n != 1) os << " count=" << n;
                    os << " p=" << wa.prob.str() << "\n";
                }
            } else {
                for (const auto& [a, m] : bb.dist.entries())
                    os << "trans " << src << " " << a.label << " " << a.target << " p=" << m.str()
                       << "\n";
            }
        },
        b);
}

}  // namespace

std::string render_system(const System& sys) {
    std::ostringstream os;
    os << "system " << sys.name << " " << kind_name(sys.kind) << "\n";
    const bool alt = sys.kind == Kind::AltMts || sys.kind == Kind::AltGts;
    for (const auto& s : sys.states) {
        os << "state " << s;
        if (alt) os << (is_prob_bundle_state(sys.bundle_of(s)) ? " prob" : " nondet");
        os << "\n";
    }
    for (const auto& s : sys.states) render_bundle_lines(os, s, sys.bundle_of(s));
    os << "end\n";
    return os.str();
}

Relation parse_relation(const std::string& text, const System& s1, const System& s2) {
    Relation rel;
    rel.left_carrier = s1.state_set();
    rel.right_carrier = s2.state_set();
    for (const auto& toks : tokenize(text)) {
        const Token& head = toks.front();
        if (head.text != "pair" || toks.size() != 3)
            throw parse_error(head.line, head.col, "expected 'pair <left> <right>'");
        rel.pairs.insert({toks[1].text, toks[2].text});
    }
    auto diags = rel.validate();
    if (!diags.empty()) throw validation_error(std::move(diags));
    return rel;
}

std::string render_relation(const Relation& rel) {
    std::ostringstream os;
    for (const auto& [l, r] : rel.pairs) os << "pair " << l << " " << r << "\n";
    return os.str();
}

Partition parse_partition(const std::string& text, const std::set<std::string>& carrier) {
    Partition p;
    p.carrier = carrier;
    for (const auto& toks : tokenize(text)) {
        const Token& head = toks.front();
        if (head.text != "class" || toks.size() < 2)
            throw parse_error(head.line, head.col, "expected 'class <id> <id>...'");
        std::set<std::string> cls;
        for (std::size_t i = 1; i < toks.size(); ++i) cls.insert(toks[i].text);
        p.classes.push_back(std::move(cls));
    }
    std::sort(p.classes.begin(), p.classes.end(),
              [](const auto& a, const auto& b) { return *a.begin() < *b.begin(); });
    auto diags = p.validate();
    if (!diags.empty()) throw validation_error(std::move(diags));
    return p;
}

std::string render_partition(const Partition& p) {
    std::ostringstream os;
    for (const auto& cls : p.classes) {
        os << "class";
        for (const auto& s : cls) os << " " << s;
        os << "\n";
    }
    return os.str();
}

OrderSpec parse_order_file(const std::string& text, const System& s1, const System& s2) {
    auto resolve = [&](const Token& t) -> Bundle {
        const std::size_t colon = t.text.find(':');
        if (colon == std::string::npos)
            throw parse_error(t.line, t.col, "expected '<1|2>:<state>', got '" + t.text + "'");
        const std::string side = t.text.substr(0, colon);
        const std::string state = t.text.substr(colon + 1);
        const System* sys = side == "1" ? &s1 : side == "2" ? &s2 : nullptr;
        if (!sys) throw parse_error(t.line, t.col, "side must be 1 or 2");
        if (!sys->has_state(state))
            throw parse_error(t.line, t.col, "no state '" + state + "' in system " + side);
        return sys->bundle_of(state);
    };
    std::vector<std::pair<Bundle, Bundle>> related;
    for (const auto& toks : tokenize(text)) {
        const Token& head = toks.front();
        if (head.text != "le" || toks.size() != 3)
            throw parse_error(head.line, head.col, "expected 'le <1|2>:<state> <1|2>:<state>'");
        related.emplace_back(resolve(toks[1]), resolve(toks[2]));
    }
    std::vector<Bundle> universe;
    for (const auto& s : s1.states) universe.push_back(s1.bundle_of(s));
    for (const auto& s : s2.states) universe.push_back(s2.bundle_of(s));
    return OrderSpec::extensional(std::move(universe), std::move(related));
}

}  // namespace coalg
