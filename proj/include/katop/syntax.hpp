#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "katop/alphabet.hpp"

namespace katop {

/// Regular expression over Σ ∪ Atom ∪ {⊤}. Immutable; copies share structure.
/// Atom and letter leaves carry their names, resolved against an Alphabet at use.
class Expr {
public:
    enum class Kind : unsigned char { Zero, One, Top, Atom, Letter, Plus, Dot, Star };

    static Expr zero();
    static Expr one();
    static Expr top();
    static Expr atom(std::string name);
    static Expr letter(std::string name);
    static Expr plus(Expr lhs, Expr rhs);
    static Expr dot(Expr lhs, Expr rhs);
    static Expr star(Expr body);

    Kind kind() const noexcept;
    /// Name of an Atom or Letter leaf.
    const std::string& name() const;
    /// Operands of Plus/Dot; body of Star is left().
    const Expr& left() const;
    const Expr& right() const;

    /// Node count.
    std::size_t size() const noexcept;
    bool has_top() const noexcept;

    friend bool operator==(const Expr& a, const Expr& b);

private:
    struct Node;
    explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

/// Boolean formula over test variables.
class TestExpr {
public:
    enum class Kind : unsigned char { True, False, Var, Not, And, Or };

    static TestExpr truth();
    static TestExpr falsity();
    static TestExpr var(std::string name);
    static TestExpr negate(TestExpr t);
    static TestExpr conj(TestExpr a, TestExpr b);
    static TestExpr disj(TestExpr a, TestExpr b);

    Kind kind() const noexcept;
    const std::string& name() const;
    const TestExpr& left() const;
    const TestExpr& right() const;

    /// Truth value under the valuation named by `atom`.
    bool eval(AtomId atom, const Alphabet& alphabet) const;

private:
    struct Node;
    explicit TestExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

/// Parses the concrete syntax:
///   expr := term ('+' term)*      term := factor ((';')? factor)*
///   factor := base '*'*           base := 0 | 1 | top | ident | @ident | [test] | (expr)
/// An identifier that is not a declared letter but spells a sequence of
/// one-character letters is read as their product, so `aaa` means a;a;a.
Expr parse(std::string_view text, const Alphabet& alphabet);

/// Test syntax: t, !t, &, |, 1, 0 and parentheses.
TestExpr parse_test(std::string_view text, const Alphabet& alphabet);

/// Atom sums accepted where a guard is expected: a test formula when the
/// alphabet has tests, otherwise `1`, `0` or atom names joined by `+`.
Expr parse_guard(std::string_view text, const Alphabet& alphabet);

/// Fully parenthesis-minimal rendering; parse(print(e)) == e.
std::string print(const Expr& e);

/// Sum of the atoms satisfying `t` (0 if none).
Expr elaborate_test(const TestExpr& t, const Alphabet& alphabet);

/// (a+b+…+top)*: an expression whose guarded-string language is all of GS over Σ⊤.
Expr full_top(const Alphabet& alphabet);

/// Replaces every ⊤ leaf by full_top(alphabet); identity elsewhere.
Expr reduce_top(const Expr& e, const Alphabet& alphabet);

/// Sum of the elements (0 if empty), folded to the left.
Expr sum(const std::vector<Expr>& terms);

/// Checks that every leaf name exists in the alphabet; throws AlphabetError.
void check_alphabet(const Expr& e, const Alphabet& alphabet);

/// Letters implied by expression text when none are declared: every
/// character of every plain identifier (outside tests and atom constants)
/// is a one-character letter. Sorted, without duplicates.
std::vector<std::string> infer_letters(std::string_view text);

}  // namespace katop
