#include "katop/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "katop/errors.hpp"

namespace katop {

struct Expr::Node {
    Kind kind;
    std::string name;
    std::vector<Expr> kids;
    std::size_t size = 1;
    bool has_top = false;
};

Expr Expr::zero() { return Expr(std::make_shared<const Node>(Node{Kind::Zero, {}, {}, 1, false})); }
Expr Expr::one() { return Expr(std::make_shared<const Node>(Node{Kind::One, {}, {}, 1, false})); }
Expr Expr::top() { return Expr(std::make_shared<const Node>(Node{Kind::Top, {}, {}, 1, true})); }

Expr Expr::atom(std::string name) {
    return Expr(std::make_shared<const Node>(Node{Kind::Atom, std::move(name), {}, 1, false}));
}

Expr Expr::letter(std::string name) {
    return Expr(std::make_shared<const Node>(Node{Kind::Letter, std::move(name), {}, 1, false}));
}

Expr Expr::plus(Expr lhs, Expr rhs) {
    const auto size = 1 + lhs.size() + rhs.size();
    const bool top = lhs.has_top() || rhs.has_top();
    return Expr(std::make_shared<const Node>(Node{Kind::Plus, {}, {std::move(lhs), std::move(rhs)}, size, top}));
}

Expr Expr::dot(Expr lhs, Expr rhs) {
    const auto size = 1 + lhs.size() + rhs.size();
    const bool top = lhs.has_top() || rhs.has_top();
    return Expr(std::make_shared<const Node>(Node{Kind::Dot, {}, {std::move(lhs), std::move(rhs)}, size, top}));
}

Expr Expr::star(Expr body) {
    const auto size = 1 + body.size();
    const bool top = body.has_top();
    return Expr(std::make_shared<const Node>(Node{Kind::Star, {}, {std::move(body)}, size, top}));
}

Expr::Kind Expr::kind() const noexcept { return node_->kind; }

const std::string& Expr::name() const {
    if (node_->kind != Kind::Atom && node_->kind != Kind::Letter) throw Error("expression has no name");
    return node_->name;
}

const Expr& Expr::left() const {
    if (node_->kids.empty()) throw Error("expression has no operands");
    return node_->kids[0];
}

const Expr& Expr::right() const {
    if (node_->kids.size() < 2) throw Error("expression has no right operand");
    return node_->kids[1];
}

std::size_t Expr::size() const noexcept { return node_->size; }
bool Expr::has_top() const noexcept { return node_->has_top; }

bool operator==(const Expr& a, const Expr& b) {
    if (a.node_ == b.node_) return true;
    if (a.node_->kind != b.node_->kind || a.node_->size != b.node_->size) return false;
    if (a.node_->name != b.node_->name) return false;
    for (std::size_t i = 0; i < a.node_->kids.size(); ++i)
        if (!(a.node_->kids[i] == b.node_->kids[i])) return false;
    return true;
}

struct TestExpr::Node {
    Kind kind;
    std::string name;
    std::vector<TestExpr> kids;
};

TestExpr TestExpr::truth() { return TestExpr(std::make_shared<const Node>(Node{Kind::True, {}, {}})); }
TestExpr TestExpr::falsity() { return TestExpr(std::make_shared<const Node>(Node{Kind::False, {}, {}})); }

TestExpr TestExpr::var(std::string name) {
    return TestExpr(std::make_shared<const Node>(Node{Kind::Var, std::move(name), {}}));
}

TestExpr TestExpr::negate(TestExpr t) {
    return TestExpr(std::make_shared<const Node>(Node{Kind::Not, {}, {std::move(t)}}));
}

TestExpr TestExpr::conj(TestExpr a, TestExpr b) {
    return TestExpr(std::make_shared<const Node>(Node{Kind::And, {}, {std::move(a), std::move(b)}}));
}

TestExpr TestExpr::disj(TestExpr a, TestExpr b) {
    return TestExpr(std::make_shared<const Node>(Node{Kind::Or, {}, {std::move(a), std::move(b)}}));
}

TestExpr::Kind TestExpr::kind() const noexcept { return node_->kind; }
const std::string& TestExpr::name() const { return node_->name; }
const TestExpr& TestExpr::left() const { return node_->kids.at(0); }
const TestExpr& TestExpr::right() const { return node_->kids.at(1); }

bool TestExpr::eval(AtomId atom, const Alphabet& alphabet) const {
    switch (kind()) {
    case Kind::True: return true;
    case Kind::False: return false;
    case Kind::Var: {
        auto t = alphabet.find_test(name());
        if (!t) throw UnknownIdentifier(name(), "not a declared test variable");
        return alphabet.holds(atom, *t);
    }
    case Kind::Not: return !left().eval(atom, alphabet);
    case Kind::And: return left().eval(atom, alphabet) && right().eval(atom, alphabet);
    case Kind::Or: return left().eval(atom, alphabet) || right().eval(atom, alphabet);
    }
    return false;
}

namespace {

enum class Tok { Plus, Semi, Star, LParen, RParen, LBrack, RBrack, At, Zero, One, Ident, Bang, Amp, Bar, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> lex(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i + 1;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_' || s[j] == '\''))
                ++j;
            out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), i});
            i = j;
            continue;
        }
        Tok k;
        switch (c) {
        case '+': k = Tok::Plus; break;
        case ';': k = Tok::Semi; break;
        case '*': k = Tok::Star; break;
        case '(': k = Tok::LParen; break;
        case ')': k = Tok::RParen; break;
        case '[': k = Tok::LBrack; break;
        case ']': k = Tok::RBrack; break;
        case '@': k = Tok::At; break;
        case '0': k = Tok::Zero; break;
        case '1': k = Tok::One; break;
        case '!': k = Tok::Bang; break;
        case '&': k = Tok::Amp; break;
        case '|': k = Tok::Bar; break;
        default: throw ParseError(std::string("unexpected character '") + c + "'", i);
        }
        out.push_back({k, std::string(1, c), i});
        ++i;
    }
    out.push_back({Tok::End, {}, s.size()});
    return out;
}

class Parser {
public:
    Parser(std::string_view text, const Alphabet& alphabet) : toks_(lex(text)), alphabet_(alphabet) {}

    Expr expression() {
        Expr e = expr();
        expect_end();
        return e;
    }

    TestExpr test_expression() {
        TestExpr t = test_or();
        expect_end();
        return t;
    }

    Expr guard() {
        if (alphabet_.tests()) return elaborate_test(test_expression(), alphabet_);
        std::vector<Expr> terms;
        do {
            terms.push_back(guard_term());
        } while (accept(Tok::Plus));
        expect_end();
        Expr out = terms.front();
        for (std::size_t i = 1; i < terms.size(); ++i) out = Expr::plus(out, terms[i]);
        return out;
    }

private:
    const Token& peek() const { return toks_[pos_]; }

    bool accept(Tok k) {
        if (peek().kind != k) return false;
        ++pos_;
        return true;
    }

    const Token& expect(Tok k, const char* what) {
        if (peek().kind != k) throw ParseError(std::string("expected ") + what, peek().pos);
        return toks_[pos_++];
    }

    void expect_end() {
        if (peek().kind != Tok::End) throw ParseError("unexpected '" + peek().text + "'", peek().pos);
    }

    Expr expr() {
        Expr e = term();
        while (accept(Tok::Plus)) e = Expr::plus(e, term());
        return e;
    }

    static bool starts_base(Tok k) {
        return k == Tok::Zero || k == Tok::One || k == Tok::Ident || k == Tok::At || k == Tok::LBrack ||
               k == Tok::LParen;
    }

    Expr term() {
        Expr e = factor();
        for (;;) {
            if (accept(Tok::Semi)) {
                e = Expr::dot(e, factor());
            } else if (starts_base(peek().kind)) {
                e = Expr::dot(e, factor());
            } else {
                return e;
            }
        }
    }

    Expr factor() {
        Expr e = base();
        while (accept(Tok::Star)) e = Expr::star(e);
        return e;
    }

    Expr base() {
        const Token& t = peek();
        switch (t.kind) {
        case Tok::Zero: ++pos_; return Expr::zero();
        case Tok::One: ++pos_; return Expr::one();
        case Tok::Ident: ++pos_; return identifier(t);
        case Tok::At: {
            ++pos_;
            const Token& id = expect(Tok::Ident, "atom name after '@'");
            if (!alphabet_.find_atom(id.text)) throw UnknownIdentifier(id.text, "not a declared atom");
            return Expr::atom(id.text);
        }
        case Tok::LBrack: {
            ++pos_;
            if (!alphabet_.tests()) throw ParseError("tests used but no test variables declared", t.pos);
            TestExpr test = test_or();
            expect(Tok::RBrack, "']'");
            return elaborate_test(test, alphabet_);
        }
        case Tok::LParen: {
            ++pos_;
            Expr e = expr();
            expect(Tok::RParen, "')'");
            return e;
        }
        default: throw ParseError("expected an expression", t.pos);
        }
    }

    Expr identifier(const Token& t) {
        if (t.text == "top") return Expr::top();
        if (alphabet_.find_letter(t.text)) return Expr::letter(t.text);
        const bool spelled = std::all_of(t.text.begin(), t.text.end(), [&](char c) {
            return alphabet_.find_letter(std::string(1, c)).has_value();
        });
        if (spelled) {
            Expr e = Expr::letter(std::string(1, t.text[0]));
            for (std::size_t i = 1; i < t.text.size(); ++i) e = Expr::dot(e, Expr::letter(std::string(1, t.text[i])));
            return e;
        }
        if (alphabet_.find_atom(t.text)) throw UnknownIdentifier(t.text, "atoms are written @" + t.text);
        throw UnknownIdentifier(t.text, "not a declared letter");
    }

    Expr guard_term() {
        if (accept(Tok::One)) return Expr::one();
        if (accept(Tok::Zero)) return Expr::zero();
        accept(Tok::At);
        const Token& id = expect(Tok::Ident, "atom name");
        if (!alphabet_.find_atom(id.text)) throw UnknownIdentifier(id.text, "not a declared atom");
        return Expr::atom(id.text);
    }

    TestExpr test_or() {
        TestExpr t = test_and();
        while (accept(Tok::Bar)) t = TestExpr::disj(t, test_and());
        return t;
    }

    TestExpr test_and() {
        TestExpr t = test_not();
        while (accept(Tok::Amp)) t = TestExpr::conj(t, test_not());
        return t;
    }

    TestExpr test_not() {
        if (accept(Tok::Bang)) return TestExpr::negate(test_not());
        const Token& t = peek();
        switch (t.kind) {
        case Tok::One: ++pos_; return TestExpr::truth();
        case Tok::Zero: ++pos_; return TestExpr::falsity();
        case Tok::Ident:
            ++pos_;
            if (!alphabet_.find_test(t.text)) throw UnknownIdentifier(t.text, "not a declared test variable");
            return TestExpr::var(t.text);
        case Tok::LParen: {
            ++pos_;
            TestExpr inner = test_or();
            expect(Tok::RParen, "')'");
            return inner;
        }
        default: throw ParseError("expected a test", t.pos);
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    const Alphabet& alphabet_;
};

// Binding strength: Plus 0, Dot 1, Star and leaves 2.
int level(const Expr& e) {
    switch (e.kind()) {
    case Expr::Kind::Plus: return 0;
    case Expr::Kind::Dot: return 1;
    default: return 2;
    }
}

void print_into(const Expr& e, std::string& out);

void print_child(const Expr& e, int min_level, std::string& out) {
    if (level(e) < min_level) {
        out += '(';
        print_into(e, out);
        out += ')';
    } else {
        print_into(e, out);
    }
}

void print_into(const Expr& e, std::string& out) {
    switch (e.kind()) {
    case Expr::Kind::Zero: out += '0'; break;
    case Expr::Kind::One: out += '1'; break;
    case Expr::Kind::Top: out += "top"; break;
    case Expr::Kind::Atom: out += '@' + e.name(); break;
    case Expr::Kind::Letter: out += e.name(); break;
    case Expr::Kind::Plus:
        print_child(e.left(), 0, out);
        out += '+';
        print_child(e.right(), 1, out);
        break;
    case Expr::Kind::Dot:
        print_child(e.left(), 1, out);
        out += ';';
        print_child(e.right(), 2, out);
        break;
    case Expr::Kind::Star:
        print_child(e.left(), 2, out);
        out += '*';
        break;
    }
}

}  // namespace

Expr parse(std::string_view text, const Alphabet& alphabet) { return Parser(text, alphabet).expression(); }

TestExpr parse_test(std::string_view text, const Alphabet& alphabet) {
    if (!alphabet.tests()) throw AlphabetError("no test variables declared");
    return Parser(text, alphabet).test_expression();
}

Expr parse_guard(std::string_view text, const Alphabet& alphabet) { return Parser(text, alphabet).guard(); }

std::string print(const Expr& e) {
    std::string out;
    print_into(e, out);
    return out;
}

Expr sum(const std::vector<Expr>& terms) {
    if (terms.empty()) return Expr::zero();
    Expr out = terms.front();
    for (std::size_t i = 1; i < terms.size(); ++i) out = Expr::plus(out, terms[i]);
    return out;
}

Expr elaborate_test(const TestExpr& t, const Alphabet& alphabet) {
    if (!alphabet.tests()) throw AlphabetError("no test variables declared");
    std::vector<Expr> atoms;
    for (AtomId a = 0; a < alphabet.num_atoms(); ++a)
        if (t.eval(a, alphabet)) atoms.push_back(Expr::atom(alphabet.atom_name(a)));
    return sum(atoms);
}

Expr full_top(const Alphabet& alphabet) {
    std::vector<Expr> leaves;
    for (const auto& l : alphabet.letters()) leaves.push_back(Expr::letter(l));
    leaves.push_back(Expr::top());
    return Expr::star(sum(leaves));
}

namespace {

Expr reduce_with(const Expr& e, const Expr& full) {
    if (!e.has_top()) return e;
    switch (e.kind()) {
    case Expr::Kind::Top: return full;
    case Expr::Kind::Plus: return Expr::plus(reduce_with(e.left(), full), reduce_with(e.right(), full));
    case Expr::Kind::Dot: return Expr::dot(reduce_with(e.left(), full), reduce_with(e.right(), full));
    case Expr::Kind::Star: return Expr::star(reduce_with(e.left(), full));
    default: return e;
    }
}

}  // namespace

Expr reduce_top(const Expr& e, const Alphabet& alphabet) { return reduce_with(e, full_top(alphabet)); }

void check_alphabet(const Expr& e, const Alphabet& alphabet) {
    switch (e.kind()) {
    case Expr::Kind::Atom:
        if (!alphabet.find_atom(e.name())) throw AlphabetError("atom '" + e.name() + "' is not in the alphabet");
        break;
    case Expr::Kind::Letter:
        if (!alphabet.find_letter(e.name()))
            throw AlphabetError("letter '" + e.name() + "' is not in the alphabet");
        break;
    case Expr::Kind::Plus:
    case Expr::Kind::Dot:
        check_alphabet(e.left(), alphabet);
        check_alphabet(e.right(), alphabet);
        break;
    case Expr::Kind::Star: check_alphabet(e.left(), alphabet); break;
    default: break;
    }
}

std::vector<std::string> infer_letters(std::string_view text) {
    std::set<std::string> found;
    const auto toks = lex(text);
    int bracket_depth = 0;
    for (std::size_t i = 0; i < toks.size(); ++i) {
        const auto& t = toks[i];
        if (t.kind == Tok::LBrack) ++bracket_depth;
        if (t.kind == Tok::RBrack) --bracket_depth;
        if (t.kind != Tok::Ident || bracket_depth > 0 || t.text == "top") continue;
        if (i > 0 && toks[i - 1].kind == Tok::At) continue;
        for (char c : t.text) found.insert(std::string(1, c));
    }
    return {found.begin(), found.end()};
}

}  // namespace katop
