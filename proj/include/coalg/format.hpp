#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "coalg/order.hpp"
#include "coalg/system.hpp"

namespace coalg {

/// Syntax error with 1-based line and column of the offending token.
class parse_error : public std::runtime_error {
public:
    parse_error(int line, int col, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) +
                             ": " + what),
          line_(line),
          col_(col) {}
    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_;
    int col_;
};

/// A syntactically well-formed input that fails semantic validation.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(std::vector<std::string> diagnostics)
        : std::runtime_error(join(diagnostics)), diagnostics_(std::move(diagnostics)) {}
    const std::vector<std::string>& diagnostics() const { return diagnostics_; }

private:
    static std::string join(const std::vector<std::string>& v);
    std::vector<std::string> diagnostics_;
};

/// Grammar (one declaration per line, '#' starts a comment):
///   system <name> <lts|mts|pmts|dts|alt-mts|alt-gts>
///   state <id> [nondet|prob]
///   trans <src> <label> <tgt> [count=<int>] [p=<num>/<den>]
///   end
/// `count` defaults to 1 and is only meaningful for multiset kinds; `p` is
/// required exactly when the owning state is probabilistic, and only
/// accepts `num/den` or integer literals.
System parse_system(const std::string& text);
std::string render_system(const System& sys);

Rat parse_rat(const std::string& text);  // "num/den" or integer, no decimals

/// `pair <left> <right>` lines; carriers come from the two systems.
Relation parse_relation(const std::string& text, const System& s1, const System& s2);
std::string render_relation(const Relation& rel);

/// `class <id> <id>...` lines over the given carrier.
Partition parse_partition(const std::string& text, const std::set<std::string>& carrier);
std::string render_partition(const Partition& p);

/// Extensional order file: `le <1|2>:<state> <1|2>:<state>` lines declare
/// that the first state's step bundle lies below the second's. The universe
/// is every step bundle of the two systems; reflexivity is implicit and
/// transitivity is validated.
OrderSpec parse_order_file(const std::string& text, const System& s1, const System& s2);

}  // namespace coalg
