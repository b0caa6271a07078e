#include "subint/sequent.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "subint/error.hpp"

namespace subint {

std::size_t Sequent::weight() const {
    std::size_t w = 0;
    for (const auto& f : ant) w += f.weight();
    for (const auto& f : suc) w += f.weight();
    return w;
}

bool operator==(const Sequent& a, const Sequent& b) {
    return same_multiset(a.ant, b.ant) && same_multiset(a.suc, b.suc);
}

bool respects(const Sequent& s, Discipline d) { return d == Discipline::Multi || s.suc.size() == 1; }

void require_discipline(const Sequent& s, Discipline d) {
    if (!respects(s, d)) {
        throw Error("single-succedent discipline requires exactly one succedent formula: " + print(s));
    }
}

std::size_t count(const Formulas& xs, const Formula& f) {
    return static_cast<std::size_t>(std::count(xs.begin(), xs.end(), f));
}

bool contains(const Formulas& xs, const Formula& f) { return std::find(xs.begin(), xs.end(), f) != xs.end(); }

Formulas sorted(Formulas a) {
    std::sort(a.begin(), a.end());
    return a;
}

bool same_multiset(const Formulas& a, const Formulas& b) {
    if (a.size() != b.size()) return false;
    if (a.size() == 1) return a[0] == b[0];
    return sorted(a) == sorted(b);
}

bool includes(const Formulas& a, const Formulas& b) {
    Formulas x = sorted(a);
    Formulas y = sorted(b);
    return std::includes(x.begin(), x.end(), y.begin(), y.end());
}

Formulas remove_one(const Formulas& a, const Formula& f) {
    auto it = std::find(a.begin(), a.end(), f);
    if (it == a.end()) throw Error("formula not present: " + print(f));
    Formulas out;
    out.reserve(a.size() - 1);
    out.insert(out.end(), a.begin(), it);
    out.insert(out.end(), std::next(it), a.end());
    return out;
}

Formulas remove_at(const Formulas& a, std::size_t index) {
    if (index >= a.size()) throw Error("index out of range");
    Formulas out = a;
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(index));
    return out;
}

Formulas difference(const Formulas& a, const Formulas& b) {
    Formulas out = a;
    for (const auto& f : b) out = remove_one(out, f);
    return out;
}

Formulas concat(const Formulas& a, const Formulas& b) {
    Formulas out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

Formulas with(const Formulas& a, const Formula& f) {
    Formulas out = a;
    out.push_back(f);
    return out;
}

Sequent canonical(const Sequent& s) { return {sorted(s.ant), sorted(s.suc)}; }

namespace {

Formulas print_ordered(const Formulas& xs) {
    std::vector<std::pair<std::string, Formula>> keyed;
    keyed.reserve(xs.size());
    for (const auto& f : xs) keyed.emplace_back(print(f), f);
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    Formulas out;
    out.reserve(xs.size());
    for (auto& [k, f] : keyed) out.push_back(std::move(f));
    return out;
}

std::vector<std::string_view> split_top_level(std::string_view text, std::size_t offset,
                                              std::vector<std::size_t>& starts) {
    std::vector<std::string_view> parts;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            parts.push_back(text.substr(start, i - start));
            starts.push_back(offset + start);
            start = i + 1;
        }
    }
    parts.push_back(text.substr(start));
    starts.push_back(offset + start);
    return parts;
}

bool blank(std::string_view s) {
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

Formulas parse_side(std::string_view text, std::size_t offset) {
    Formulas out;
    if (blank(text)) return out;
    std::vector<std::size_t> starts;
    auto parts = split_top_level(text, offset, starts);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (blank(parts[i])) throw ParseError("empty formula in list", starts[i]);
        try {
            out.push_back(parse(parts[i]));
        } catch (const ParseError& e) {
            throw ParseError("malformed formula", starts[i] + e.position());
        }
    }
    return out;
}

}  // namespace

Formula conjunction_of(const Formulas& xs) {
    if (xs.empty()) return Formula::top();
    return fold_conj(print_ordered(xs));
}

Formula disjunction_of(const Formulas& xs) {
    if (xs.empty()) return Formula::bottom();
    return fold_disj(print_ordered(xs));
}

Formula interpretation(const Sequent& s) { return Formula::imp(conjunction_of(s.ant), disjunction_of(s.suc)); }

Sequent parse_sequent(std::string_view text) {
    auto arrow = text.find("=>");
    if (arrow == std::string_view::npos) {
        if (blank(text)) throw ParseError("empty sequent", 0);
        return {{}, parse_side(text, 0)};
    }
    if (text.find("=>", arrow + 2) != std::string_view::npos) {
        throw ParseError("more than one '=>'", text.find("=>", arrow + 2));
    }
    return {parse_side(text.substr(0, arrow), 0), parse_side(text.substr(arrow + 2), arrow + 2)};
}

std::string print(const Formulas& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ", ";
        out += print(xs[i]);
    }
    return out;
}

std::string print(const Sequent& s) {
    std::string l = print(s.ant);
    std::string r = print(s.suc);
    std::string out = l;
    if (!l.empty()) out += ' ';
    out += "=>";
    if (!r.empty()) out += ' ' + r;
    return out;
}

}  // namespace subint
