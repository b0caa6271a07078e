#include "subint/error.hpp"
#include "subint/semantics.hpp"

namespace subint {

namespace {

class Closure {
public:
    Closure(std::size_t worlds, const std::vector<FrameProperty>& props) : base_(worlds), props_(props) {}

    std::uint64_t close(std::uint64_t t) const {
        const WorldSet full = base_.full();
        bool changed = true;
        while (changed) {
            changed = false;
            auto add = [&](WorldSet x, WorldSet y) {
                const std::uint64_t bit = std::uint64_t{1} << base_.pair_index(x & full, y & full);
                if (!(t & bit)) {
                    t |= bit;
                    changed = true;
                }
            };
            auto in = [&](WorldSet x, WorldSet y) { return (t >> base_.pair_index(x, y)) & 1u; };
            for (auto p : props_) {
                for (WorldSet x = 0; x <= full; ++x) {
                    for (WorldSet y = 0; y <= full; ++y) {
                        if (!in(x, y)) continue;
                        for (WorldSet z = 0; z <= full; ++z) {
                            switch (p) {
                            case FrameProperty::Intersection:
                                if (in(x, z)) add(x, y & z);
                                break;
                            case FrameProperty::Union:
                                if (in(z, y)) add(x | z, y);
                                break;
                            case FrameProperty::Transitivity:
                                if (in(y, z)) add(x, z);
                                break;
                            case FrameProperty::Upset:
                                if ((y & ~z) == 0) add(x, z);
                                break;
                            case FrameProperty::Downset:
                                if ((z & ~x) == 0) add(z, y);
                                break;
                            case FrameProperty::Equivalence:
                            case FrameProperty::SupersetEquivalence: {
                                const WorldSet spread = (~x | y) & full;
                                for (WorldSet y2 = 0; y2 <= full; ++y2) {
                                    const WorldSet other = (~z | y2) & full;
                                    if (p == FrameProperty::Equivalence ? spread == other : (spread & ~other) == 0) {
                                        add(z, y2);
                                    }
                                }
                                break;
                            }
                            }
                        }
                    }
                }
            }
        }
        return t;
    }

private:
    NBFrame base_;
    std::vector<FrameProperty> props_;
};

struct Partial {
    std::vector<std::uint64_t> yes;
    std::vector<std::uint64_t> no;
};

class LazySearch {
public:
    LazySearch(std::size_t worlds, const std::vector<FrameProperty>& props, const Formula& f)
        : worlds_(worlds), closure_(worlds, props), formula_(f), frame_(worlds) {}

    std::optional<Countermodel> run(const std::map<std::string, WorldSet>& valuation) {
        valuation_ = &valuation;
        Partial start;
        for (std::size_t w = 0; w < worlds_; ++w) {
            start.yes.push_back(closure_.close(frame_.bits(w)));
            start.no.push_back(0);
        }
        return dfs(start);
    }

private:
    std::size_t worlds_;
    Closure closure_;
    Formula formula_;
    NBFrame frame_;
    const std::map<std::string, WorldSet>* valuation_ = nullptr;
    std::size_t blocked_world_ = 0;
    std::size_t blocked_pair_ = 0;

    std::optional<WorldSet> eval(const Formula& f, const Partial& p) {
        switch (f.kind()) {
        case Connective::Bottom:
            return WorldSet{0};
        case Connective::Atom:
            return valuation_->at(f.name());
        case Connective::And:
        case Connective::Or: {
            auto a = eval(f.left(), p);
            if (!a) return std::nullopt;
            auto b = eval(f.right(), p);
            if (!b) return std::nullopt;
            return f.is_and() ? (*a & *b) : (*a | *b);
        }
        case Connective::Imp: {
            auto a = eval(f.left(), p);
            if (!a) return std::nullopt;
            auto b = eval(f.right(), p);
            if (!b) return std::nullopt;
            const std::size_t idx = frame_.pair_index(*a, *b);
            WorldSet out = 0;
            for (std::size_t w = 0; w < worlds_; ++w) {
                if ((p.yes[w] >> idx) & 1u) {
                    out |= WorldSet{1} << w;
                } else if (!((p.no[w] >> idx) & 1u)) {
                    blocked_world_ = w;
                    blocked_pair_ = idx;
                    return std::nullopt;
                }
            }
            return out;
        }
        }
        return std::nullopt;
    }

    std::optional<Countermodel> dfs(const Partial& p) {
        auto value = eval(formula_, p);
        if (value) {
            if (*value == frame_.full()) return std::nullopt;
            NBFrame fr(worlds_);
            for (std::size_t w = 0; w < worlds_; ++w) fr.set_bits(w, p.yes[w]);
            std::size_t world = 0;
            while ((*value >> world) & 1u) ++world;
            return Countermodel{NBModel{fr, *valuation_}, world};
        }
        const std::size_t w = blocked_world_;
        const std::uint64_t bit = std::uint64_t{1} << blocked_pair_;
        Partial off = p;
        off.no[w] |= bit;
        if (auto found = dfs(off)) return found;
        Partial on = p;
        on.yes[w] = closure_.close(p.yes[w] | bit);
        if (on.yes[w] & on.no[w]) return std::nullopt;
        return dfs(on);
    }
};

std::vector<std::map<std::string, WorldSet>> valuations(const std::vector<std::string>& names, std::size_t worlds) {
    const std::size_t per_atom = std::size_t{1} << worlds;
    std::size_t total = 1;
    for (std::size_t i = 0; i < names.size(); ++i) total *= per_atom;
    std::vector<std::map<std::string, WorldSet>> out;
    out.reserve(total);
    for (std::size_t code = 0; code < total; ++code) {
        std::map<std::string, WorldSet> v;
        std::size_t c = code;
        for (const auto& n : names) {
            v[n] = static_cast<WorldSet>(c % per_atom);
            c /= per_atom;
        }
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<std::string> budget_atoms(const Formula& f, const CountermodelConfig& cfg) {
    auto names = atoms(f);
    if (names.size() > cfg.max_atoms) {
        throw Error("formula has " + std::to_string(names.size()) + " atoms, budget allows " +
                    std::to_string(cfg.max_atoms));
    }
    return names;
}

}  // namespace

std::optional<Countermodel> countermodel(const std::vector<FrameProperty>& properties, const Formula& f,
                                         const CountermodelConfig& cfg) {
    const auto names = budget_atoms(f, cfg);
    if (cfg.max_worlds > NBFrame::max_worlds) throw Error("countermodel search supports at most 3 worlds");
    for (std::size_t n = 1; n <= cfg.max_worlds; ++n) {
        LazySearch search(n, properties, f);
        for (const auto& v : valuations(names, n)) {
            if (auto found = search.run(v)) return found;
        }
    }
    return std::nullopt;
}

std::optional<Countermodel> countermodel_exhaustive(const std::vector<FrameProperty>& properties, const Formula& f,
                                                    const CountermodelConfig& cfg) {
    const auto names = budget_atoms(f, cfg);
    if (cfg.max_worlds > 2) throw Error("exhaustive enumeration supports at most 2 worlds");
    for (std::size_t n = 1; n <= cfg.max_worlds; ++n) {
        const auto vals = valuations(names, n);
        std::optional<Countermodel> found;
        for_each_frame(n, properties, [&](const NBFrame& fr) {
            for (const auto& v : vals) {
                NBModel m{fr, v};
                const WorldSet s = truth_set(m, f);
                if (s != fr.full()) {
                    std::size_t world = 0;
                    while ((s >> world) & 1u) ++world;
                    found = Countermodel{std::move(m), world};
                    return false;
                }
            }
            return true;
        });
        if (found) return found;
    }
    return std::nullopt;
}

}  // namespace subint
