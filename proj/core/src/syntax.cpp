#include "subint/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "subint/error.hpp"

namespace subint {

struct Formula::Node {
    Connective kind;
    std::string name;
    Formula left_child{nullptr};
    Formula right_child{nullptr};
    std::size_t weight = 0;
    std::size_t size = 1;
    std::size_t hash = 0;
};

namespace {

constexpr std::uint64_t kFnvOffset = 1469598103934665603ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
        h ^= (v >> (8 * i)) & 0xffU;
        h *= kFnvPrime;
    }
    return h;
}

std::uint64_t hash_string(const std::string& s) {
    std::uint64_t h = kFnvOffset;
    for (unsigned char c : s) {
        h ^= c;
        h *= kFnvPrime;
    }
    return h;
}

}  // namespace

Formula::Formula() : Formula(bottom()) {}

Formula::Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Formula Formula::bottom() {
    static const std::shared_ptr<const Node> node = [] {
        auto n = std::make_shared<Node>();
        n->kind = Connective::Bottom;
        n->weight = 0;
        n->hash = mix(kFnvOffset, 1);
        return n;
    }();
    return Formula(node);
}

Formula Formula::atom(std::string name) {
    auto n = std::make_shared<Node>();
    n->kind = Connective::Atom;
    n->hash = mix(hash_string(name), 2);
    n->name = std::move(name);
    n->weight = 1;
    return Formula(std::move(n));
}

Formula Formula::binary(Connective c, Formula l, Formula r) {
    auto n = std::make_shared<Node>();
    n->kind = c;
    n->weight = l.weight() + r.weight() + 1;
    n->size = l.size() + r.size() + 1;
    n->hash = mix(mix(mix(kFnvOffset, static_cast<std::uint64_t>(c) + 3), l.hash()), r.hash());
    n->left_child = std::move(l);
    n->right_child = std::move(r);
    return Formula(std::move(n));
}

Formula Formula::conj(Formula l, Formula r) { return binary(Connective::And, std::move(l), std::move(r)); }
Formula Formula::disj(Formula l, Formula r) { return binary(Connective::Or, std::move(l), std::move(r)); }
Formula Formula::imp(Formula l, Formula r) { return binary(Connective::Imp, std::move(l), std::move(r)); }

Formula Formula::iff(const Formula& l, const Formula& r) { return conj(imp(l, r), imp(r, l)); }

Formula Formula::top() {
    static const Formula t = imp(bottom(), bottom());
    return t;
}

Connective Formula::kind() const noexcept { return node_->kind; }
const std::string& Formula::name() const noexcept { return node_->name; }

const Formula& Formula::left() const {
    if (!is_binary()) throw Error("left() on a formula without children");
    return node_->left_child;
}

const Formula& Formula::right() const {
    if (!is_binary()) throw Error("right() on a formula without children");
    return node_->right_child;
}

std::size_t Formula::weight() const noexcept { return node_->weight; }
std::size_t Formula::size() const noexcept { return node_->size; }
std::size_t Formula::hash() const noexcept { return node_->hash; }

bool operator==(const Formula& a, const Formula& b) noexcept {
    if (a.node_ == b.node_) return true;
    const auto& x = *a.node_;
    const auto& y = *b.node_;
    if (x.hash != y.hash || x.kind != y.kind || x.weight != y.weight) return false;
    switch (x.kind) {
    case Connective::Bottom: return true;
    case Connective::Atom: return x.name == y.name;
    default: return x.left_child == y.left_child && x.right_child == y.right_child;
    }
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) noexcept {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    const auto& x = *a.node_;
    const auto& y = *b.node_;
    if (auto c = x.weight <=> y.weight; c != 0) return c;
    if (auto c = x.kind <=> y.kind; c != 0) return c;
    switch (x.kind) {
    case Connective::Bottom: return std::strong_ordering::equal;
    case Connective::Atom: return x.name.compare(y.name) <=> 0;
    default:
        if (auto c = x.left_child <=> y.left_child; c != 0) return c;
        return x.right_child <=> y.right_child;
    }
}

std::size_t weight(const Formula& f) noexcept { return f.weight(); }

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Formula parse_all() {
        Formula f = parse_iff();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected input");
        return f;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(std::string_view tok) {
        skip_space();
        if (text_.substr(pos_, tok.size()) == tok) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }

    Formula parse_iff() {
        Formula l = parse_imp();
        if (accept("<->")) {
            Formula r = parse_iff();
            return Formula::iff(l, r);
        }
        return l;
    }

    Formula parse_imp() {
        Formula l = parse_or();
        if (accept("->")) {
            Formula r = parse_imp();
            return Formula::imp(std::move(l), std::move(r));
        }
        return l;
    }

    Formula parse_or() {
        Formula l = parse_and();
        while (accept("|")) l = Formula::disj(std::move(l), parse_and());
        return l;
    }

    Formula parse_and() {
        Formula l = parse_atom();
        while (accept("&")) l = Formula::conj(std::move(l), parse_atom());
        return l;
    }

    Formula parse_atom() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        if (accept("(")) {
            Formula f = parse_iff();
            if (!accept(")")) fail("expected ')'");
            return f;
        }
        char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size()) {
                char d = text_[pos_];
                if (std::isalnum(static_cast<unsigned char>(d)) || d == '_' || d == '\'') {
                    ++pos_;
                } else {
                    break;
                }
            }
            std::string ident(text_.substr(start, pos_ - start));
            if (ident == "false") return Formula::bottom();
            return Formula::atom(std::move(ident));
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

int precedence(const Formula& f) {
    switch (f.kind()) {
    case Connective::Imp: return 1;
    case Connective::Or: return 2;
    case Connective::And: return 3;
    default: return 4;
    }
}

void print_into(const Formula& f, std::string& out) {
    auto child = [&out](const Formula& c, bool parens) {
        if (parens) out += '(';
        print_into(c, out);
        if (parens) out += ')';
    };
    switch (f.kind()) {
    case Connective::Bottom: out += "false"; return;
    case Connective::Atom: out += f.name(); return;
    case Connective::And:
        child(f.left(), precedence(f.left()) < 3);
        out += " & ";
        child(f.right(), precedence(f.right()) <= 3);
        return;
    case Connective::Or:
        child(f.left(), precedence(f.left()) < 2);
        out += " | ";
        child(f.right(), precedence(f.right()) <= 2);
        return;
    case Connective::Imp:
        child(f.left(), precedence(f.left()) <= 1);
        out += " -> ";
        child(f.right(), false);
        return;
    }
}

void collect_atoms(const Formula& f, std::set<std::string>& out) {
    if (f.is_atom()) {
        out.insert(f.name());
    } else if (f.is_binary()) {
        collect_atoms(f.left(), out);
        collect_atoms(f.right(), out);
    }
}

void collect_subformulas(const Formula& f, std::set<Formula>& out) {
    if (!out.insert(f).second) return;
    if (f.is_binary()) {
        collect_subformulas(f.left(), out);
        collect_subformulas(f.right(), out);
    }
}

}  // namespace

Formula parse(std::string_view text) { return Parser(text).parse_all(); }

std::string print(const Formula& f) {
    std::string out;
    print_into(f, out);
    return out;
}

std::vector<std::string> atoms(const Formula& f) {
    std::set<std::string> s;
    collect_atoms(f, s);
    return {s.begin(), s.end()};
}

std::vector<Formula> subformulas(const Formula& f) {
    std::set<Formula> s;
    collect_subformulas(f, s);
    return {s.begin(), s.end()};
}

Formula fold_conj(const std::vector<Formula>& fs) {
    if (fs.empty()) throw Error("fold_conj of an empty list");
    Formula acc = fs.back();
    for (std::size_t i = fs.size() - 1; i-- > 0;) acc = Formula::conj(fs[i], acc);
    return acc;
}

Formula fold_disj(const std::vector<Formula>& fs) {
    if (fs.empty()) throw Error("fold_disj of an empty list");
    Formula acc = fs.back();
    for (std::size_t i = fs.size() - 1; i-- > 0;) acc = Formula::disj(fs[i], acc);
    return acc;
}

}  // namespace subint
