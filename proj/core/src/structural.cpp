#include "subint/structural.hpp"

#include "subint/error.hpp"

namespace subint {

namespace {

Sequent add_to(const Sequent& s, Side side, const Formula& f) {
    Sequent out = s;
    out.side(side).push_back(f);
    return out;
}

Sequent drop_from(const Sequent& s, Side side, const Formula& f) {
    Sequent out = s;
    out.side(side) = remove_one(s.side(side), f);
    return out;
}

Derivation weaken_rec(const Derivation& d, Side side, const Formula& f) {
    Sequent concl = add_to(d.conclusion(), side, f);
    const Rule r = d.rule();
    if (r == Rule::Cut) {
        std::vector<Derivation> ps = d.premises();
        std::size_t i = side == Side::Left ? 0 : 1;
        ps[i] = weaken_rec(ps[i], side, f);
        return Derivation::make(r, std::move(concl), d.principal(), std::move(ps), d.cut_formula());
    }
    if (!context_sharing(r)) return Derivation::make(r, std::move(concl), d.principal(), d.premises());
    std::vector<Derivation> ps;
    ps.reserve(d.premises().size());
    for (const auto& p : d.premises()) ps.push_back(weaken_rec(p, side, f));
    return Derivation::make(r, std::move(concl), d.principal(), std::move(ps));
}

InversionShape shape_of(const Formula& f, Side side) {
    if (side == Side::Left) return f.is_and() ? InversionShape::AndL : InversionShape::OrL;
    return f.is_and() ? InversionShape::AndR : InversionShape::OrR;
}

Side side_of(InversionShape s) {
    return s == InversionShape::AndL || s == InversionShape::OrL ? Side::Left : Side::Right;
}

std::vector<Sequent> inverted_conclusions(const Sequent& s, const Formula& target, InversionShape shape) {
    Side side = side_of(shape);
    Sequent base = drop_from(s, side, target);
    auto plus = [&](std::initializer_list<Formula> fs) {
        Sequent out = base;
        for (const auto& f : fs) out.side(side).push_back(f);
        return out;
    };
    const Formula& a = target.left();
    const Formula& b = target.right();
    switch (shape) {
    case InversionShape::AndL:
    case InversionShape::OrR: return {plus({a, b})};
    case InversionShape::OrL:
    case InversionShape::AndR: return {plus({a}), plus({b})};
    }
    return {};
}

std::optional<Formula> principal_on(const Derivation& d, Side side) {
    return side == Side::Left ? d.left_principal() : d.right_principal();
}

/// Index of the cut premise that owns a copy of f on the given side of the
/// cut's conclusion, given that at least `need` copies are required there.
std::optional<std::size_t> cut_owner(const Derivation& d, Side side, const Formula& f, std::size_t need) {
    const Formula& c = *d.cut_formula();
    const auto& l = d.premise(0).conclusion();
    const auto& r = d.premise(1).conclusion();
    std::size_t in_left = side == Side::Left ? count(l.ant, f) : count(l.suc, f) - (f == c ? 1 : 0);
    std::size_t in_right = side == Side::Left ? count(r.ant, f) - (f == c ? 1 : 0) : count(r.suc, f);
    if (in_left >= need) return 0;
    if (in_right >= need) return 1;
    return std::nullopt;
}

std::vector<Derivation> invert_rec(const Derivation& d, const Formula& target, InversionShape shape) {
    const Side side = side_of(shape);
    const Rule r = d.rule();
    auto concls = inverted_conclusions(d.conclusion(), target, shape);
    auto principal = principal_on(d, side);
    if (principal && *principal == target && context_sharing(r)) return d.premises();

    std::vector<Derivation> out;
    if (r == Rule::Cut) {
        auto owner = cut_owner(d, side, target, 1);
        if (!owner) throw Error("inversion target not found in cut premises");
        auto inv = invert_rec(d.premise(*owner), target, shape);
        for (std::size_t k = 0; k < concls.size(); ++k) {
            std::vector<Derivation> ps = d.premises();
            ps[*owner] = inv[k];
            out.push_back(Derivation::make(r, concls[k], {}, std::move(ps), d.cut_formula()));
        }
        return out;
    }
    if (!context_sharing(r)) {
        for (auto& c : concls) out.push_back(d.with_conclusion(std::move(c)));
        return out;
    }
    std::vector<std::vector<Derivation>> per_premise;
    for (const auto& p : d.premises()) per_premise.push_back(invert_rec(p, target, shape));
    for (std::size_t k = 0; k < concls.size(); ++k) {
        std::vector<Derivation> ps;
        for (auto& inv : per_premise) ps.push_back(inv[k]);
        out.push_back(Derivation::build(r, concls[k], d.left_principal(), d.right_principal(), std::move(ps)));
    }
    return out;
}

Derivation contract_rec(const Derivation& d, Side side, const Formula& f) {
    const Rule r = d.rule();
    Sequent concl = drop_from(d.conclusion(), side, f);
    if (r == Rule::Cut) {
        auto owner = cut_owner(d, side, f, 2);
        if (!owner) {
            throw UnsupportedError("contraction of " + print(f) + " whose copies come from different cut premises");
        }
        std::vector<Derivation> ps = d.premises();
        ps[*owner] = contract_rec(ps[*owner], side, f);
        return Derivation::make(r, std::move(concl), {}, std::move(ps), d.cut_formula());
    }
    if (!context_sharing(r)) return d.with_conclusion(std::move(concl));

    auto principal = principal_on(d, side);
    std::vector<Derivation> ps;
    if (principal && *principal == f) {
        const Formula& a = f.left();
        const Formula& b = f.right();
        auto shape = shape_of(f, side);
        switch (r) {
        case Rule::AndL:
        case Rule::OrR: {
            auto inv = invert_rec(d.premise(0), f, shape)[0];
            ps.push_back(contract_rec(contract_rec(inv, side, a), side, b));
            break;
        }
        case Rule::OrL:
        case Rule::AndR: {
            auto inv0 = invert_rec(d.premise(0), f, shape)[0];
            auto inv1 = invert_rec(d.premise(1), f, shape)[1];
            ps.push_back(contract_rec(inv0, side, a));
            ps.push_back(contract_rec(inv1, side, b));
            break;
        }
        default: throw Error("contraction of a principal formula under " + std::string(rule_name(r)));
        }
    } else {
        for (const auto& p : d.premises()) ps.push_back(contract_rec(p, side, f));
    }
    return Derivation::build(r, std::move(concl), d.left_principal(), d.right_principal(), std::move(ps));
}

void require_side(SystemId system, Side side, const char* what) {
    if (side == Side::Right && discipline(system) == Discipline::Single) {
        throw Error(std::string("right ") + what + " is not available in single-succedent systems");
    }
}

}  // namespace

Derivation weaken(SystemId system, const Derivation& d, Side side, const Formula& f) {
    require_side(system, side, "weakening");
    return weaken_rec(d, side, f);
}

Derivation weaken_all(SystemId system, const Derivation& d, Side side, const Formulas& fs) {
    if (fs.empty()) return d;
    require_side(system, side, "weakening");
    Derivation out = d;
    for (const auto& f : fs) out = weaken_rec(out, side, f);
    return out;
}

Derivation contract(SystemId system, const Derivation& d, Side side, const Formula& f) {
    require_side(system, side, "contraction");
    if (count(d.conclusion().side(side), f) < 2) {
        throw Error("contraction needs two copies of " + print(f) + " in " + print(d.conclusion()));
    }
    return contract_rec(d, side, f);
}

Derivation contract_all(SystemId system, const Derivation& d, Side side, const Formulas& fs) {
    Derivation out = d;
    for (const auto& f : fs) out = contract(system, out, side, f);
    return out;
}

std::vector<Derivation> invert(SystemId system, const Derivation& d, InversionShape shape, const Formula& target) {
    const Side side = side_of(shape);
    if (shape == InversionShape::OrR && discipline(system) == Discipline::Single) {
        throw Error("OrR inversion is not available in single-succedent systems");
    }
    bool ok = (shape == InversionShape::AndL || shape == InversionShape::AndR) ? target.is_and() : target.is_or();
    if (!ok || !contains(d.conclusion().side(side), target)) {
        throw Error("endsequent does not exhibit " + print(target) + " in the required position");
    }
    return invert_rec(d, target, shape);
}

std::vector<Derivation> invert(SystemId system, const Derivation& d, InversionShape shape) {
    const Side side = side_of(shape);
    const bool want_and = shape == InversionShape::AndL || shape == InversionShape::AndR;
    for (const auto& f : d.conclusion().side(side)) {
        if (want_and ? f.is_and() : f.is_or()) return invert(system, d, shape, f);
    }
    throw Error("endsequent has no formula of the requested shape: " + print(d.conclusion()));
}

}  // namespace subint
