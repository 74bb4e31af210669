#include "katop/alphabet.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "katop/errors.hpp"

namespace katop {

namespace {

constexpr std::size_t kMaxTests = 16;

bool is_reserved(std::string_view name) {
    return name == "0" || name == "1" || name == "top" || name == "T";
}

template <class Range>
std::optional<int> index_of(const Range& names, std::string_view name) {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) return std::nullopt;
    return static_cast<int>(it - names.begin());
}

}  // namespace

bool is_identifier(std::string_view name) {
    if (name.empty()) return false;
    auto head = static_cast<unsigned char>(name.front());
    if (!std::isalpha(head) && head != '_') return false;
    return std::all_of(name.begin() + 1, name.end(), [](char c) {
        auto u = static_cast<unsigned char>(c);
        return std::isalnum(u) || c == '_' || c == '\'';
    });
}

Alphabet Alphabet::make(std::vector<std::string> letters, std::vector<std::string> atoms) {
    Alphabet a;
    a.letters_ = std::move(letters);
    a.atoms_ = std::move(atoms);
    a.validate();
    return a;
}

Alphabet Alphabet::with_tests(std::vector<std::string> letters, std::vector<std::string> tests) {
    if (tests.size() > kMaxTests)
        throw AlphabetError("too many test variables (" + std::to_string(tests.size()) + ")");
    Alphabet a;
    a.letters_ = std::move(letters);
    const std::size_t n = tests.size();
    for (std::size_t k = 0; k < (std::size_t{1} << n); ++k) {
        std::string name = "at_";
        for (std::size_t i = 0; i < n; ++i) name += ((k >> (n - 1 - i)) & 1U) ? '1' : '0';
        a.atoms_.push_back(std::move(name));
    }
    a.tests_ = std::move(tests);
    a.validate();
    return a;
}

Alphabet Alphabet::single_atom(std::vector<std::string> letters) {
    return make(std::move(letters), {"alpha"});
}

void Alphabet::validate() const {
    if (atoms_.empty()) throw AlphabetError("the atom set must be nonempty");
    std::set<std::string> seen;
    auto check = [&](const std::string& name, const char* what) {
        if (!is_identifier(name) || is_reserved(name))
            throw AlphabetError(std::string("invalid ") + what + " name '" + name + "'");
        if (!seen.insert(name).second) throw AlphabetError("name '" + name + "' declared twice");
    };
    for (const auto& l : letters_) check(l, "letter");
    for (const auto& at : atoms_) check(at, "atom");
    if (tests_) {
        std::set<std::string> test_names;
        for (const auto& t : *tests_) {
            if (!is_identifier(t) || is_reserved(t))
                throw AlphabetError("invalid test name '" + t + "'");
            if (!test_names.insert(t).second) throw AlphabetError("test '" + t + "' declared twice");
        }
    }
}

std::optional<AtomId> Alphabet::find_atom(std::string_view name) const { return index_of(atoms_, name); }

std::optional<SymbolId> Alphabet::find_letter(std::string_view name) const {
    return index_of(letters_, name);
}

std::optional<int> Alphabet::find_test(std::string_view name) const {
    if (!tests_) return std::nullopt;
    return index_of(*tests_, name);
}

bool Alphabet::holds(AtomId atom, int test) const {
    const auto n = tests_ ? tests_->size() : 0;
    if (test < 0 || static_cast<std::size_t>(test) >= n) throw AlphabetError("no such test variable");
    return ((static_cast<unsigned>(atom) >> (n - 1 - static_cast<std::size_t>(test))) & 1U) != 0;
}

std::vector<SymbolId> Alphabet::symbols() const {
    std::vector<SymbolId> out;
    for (int i = 0; i < num_letters(); ++i) out.push_back(i);
    out.push_back(kTop);
    return out;
}

std::string Alphabet::symbol_name(SymbolId s) const {
    if (s == kTop) return "T";
    return letters_.at(static_cast<std::size_t>(s));
}

}  // namespace katop
