#include "subint/semantics.hpp"

#include "subint/error.hpp"
#include "subint/hilbert.hpp"

namespace subint {

namespace {

constexpr std::pair<FrameProperty, std::string_view> property_names[] = {
    {FrameProperty::Intersection, "Intersection"},
    {FrameProperty::Union, "Union"},
    {FrameProperty::Transitivity, "Transitivity"},
    {FrameProperty::Upset, "Upset"},
    {FrameProperty::Downset, "Downset"},
    {FrameProperty::Equivalence, "Equivalence"},
    {FrameProperty::SupersetEquivalence, "SupersetEquivalence"},
};

bool subset(WorldSet a, WorldSet b) { return (a & ~b) == 0; }

bool property_at(const NBFrame& fr, std::size_t w, FrameProperty p) {
    const WorldSet full = fr.full();
    auto in = [&](WorldSet x, WorldSet y) { return fr.contains(w, x, y); };
    for (WorldSet x = 0; x <= full; ++x) {
        for (WorldSet y = 0; y <= full; ++y) {
            if (!in(x, y)) continue;
            for (WorldSet z = 0; z <= full; ++z) {
                switch (p) {
                case FrameProperty::Intersection:
                    if (in(x, z) && !in(x, y & z)) return false;
                    break;
                case FrameProperty::Union:
                    if (in(z, y) && !in(x | z, y)) return false;
                    break;
                case FrameProperty::Transitivity:
                    if (in(y, z) && !in(x, z)) return false;
                    break;
                case FrameProperty::Upset:
                    if (subset(y, z) && !in(x, z)) return false;
                    break;
                case FrameProperty::Downset:
                    if (subset(z, x) && !in(z, y)) return false;
                    break;
                case FrameProperty::Equivalence:
                case FrameProperty::SupersetEquivalence: {
                    const WorldSet spread = (~x | y) & full;
                    for (WorldSet y2 = 0; y2 <= full; ++y2) {
                        const WorldSet other = (~z | y2) & full;
                        const bool related =
                            p == FrameProperty::Equivalence ? spread == other : subset(spread, other);
                        if (related && !in(z, y2)) return false;
                    }
                    break;
                }
                }
            }
        }
    }
    return true;
}

}  // namespace

std::string_view property_name(FrameProperty p) {
    for (const auto& [k, v] : property_names) {
        if (k == p) return v;
    }
    return "?";
}

std::optional<FrameProperty> property_from_name(std::string_view name) {
    for (const auto& [k, v] : property_names) {
        if (v == name) return k;
    }
    return std::nullopt;
}

const std::vector<FrameProperty>& all_properties() {
    static const std::vector<FrameProperty> ps = [] {
        std::vector<FrameProperty> out;
        for (const auto& [k, v] : property_names) out.push_back(k);
        return out;
    }();
    return ps;
}

NBFrame::NBFrame(std::size_t worlds) : worlds_(worlds) {
    if (worlds == 0 || worlds > max_worlds) throw Error("frames need between 1 and 3 worlds");
    std::uint64_t forced_bits = 0;
    for (WorldSet x = 0; x <= full(); ++x) {
        for (WorldSet y = 0; y <= full(); ++y) {
            if (forced(x, y)) forced_bits |= std::uint64_t{1} << pair_index(x, y);
        }
    }
    nb_.assign(worlds, forced_bits);
}

bool NBFrame::contains(std::size_t w, WorldSet x, WorldSet y) const {
    return (nb_.at(w) >> pair_index(x & full(), y & full())) & 1u;
}

void NBFrame::insert(std::size_t w, WorldSet x, WorldSet y) {
    nb_.at(w) |= std::uint64_t{1} << pair_index(x & full(), y & full());
}

void NBFrame::erase(std::size_t w, WorldSet x, WorldSet y) {
    if (forced(x & full(), y & full())) throw Error("pairs with X a subset of Y cannot be removed");
    nb_.at(w) &= ~(std::uint64_t{1} << pair_index(x & full(), y & full()));
}

void NBFrame::set_bits(std::size_t w, std::uint64_t bits) {
    const std::uint64_t forced_bits = NBFrame(worlds_).nb_[0];
    if ((bits & forced_bits) != forced_bits) throw Error("neighbourhood misses a forced pair");
    const std::size_t pairs = std::size_t{1} << (2 * worlds_);
    if (pairs < 64 && (bits >> pairs) != 0) throw Error("neighbourhood bits out of range");
    nb_.at(w) = bits;
}

WorldSet truth_set(const NBModel& m, const Formula& f) {
    switch (f.kind()) {
    case Connective::Bottom:
        return 0;
    case Connective::Atom: {
        auto it = m.valuation.find(f.name());
        if (it == m.valuation.end()) throw Error("valuation misses atom " + f.name());
        return it->second & m.frame.full();
    }
    case Connective::And:
        return truth_set(m, f.left()) & truth_set(m, f.right());
    case Connective::Or:
        return truth_set(m, f.left()) | truth_set(m, f.right());
    case Connective::Imp: {
        const WorldSet a = truth_set(m, f.left());
        const WorldSet b = truth_set(m, f.right());
        WorldSet out = 0;
        for (std::size_t w = 0; w < m.frame.worlds(); ++w) {
            if (m.frame.contains(w, a, b)) out |= WorldSet{1} << w;
        }
        return out;
    }
    }
    return 0;
}

bool valid_in_model(const NBModel& m, const Formula& f) { return truth_set(m, f) == m.frame.full(); }

bool has_property(const NBFrame& fr, FrameProperty p) {
    for (std::size_t w = 0; w < fr.worlds(); ++w) {
        if (!property_at(fr, w, p)) return false;
    }
    return true;
}

bool has_properties(const NBFrame& fr, const std::vector<FrameProperty>& ps) {
    for (auto p : ps) {
        if (!has_property(fr, p)) return false;
    }
    return true;
}

void for_each_frame(std::size_t worlds, const std::vector<FrameProperty>& required,
                    const std::function<bool(const NBFrame&)>& visit) {
    if (worlds != 1 && worlds != 2) throw Error("frame enumeration supports one or two worlds");
    NBFrame base(worlds);
    std::vector<std::size_t> free;
    for (WorldSet x = 0; x <= base.full(); ++x) {
        for (WorldSet y = 0; y <= base.full(); ++y) {
            if (!NBFrame::forced(x, y)) free.push_back(base.pair_index(x, y));
        }
    }
    const std::size_t per_world = free.size();
    const std::uint64_t total = std::uint64_t{1} << (per_world * worlds);
    for (std::uint64_t code = 0; code < total; ++code) {
        NBFrame fr = base;
        for (std::size_t w = 0; w < worlds; ++w) {
            std::uint64_t bits = fr.bits(w);
            for (std::size_t i = 0; i < per_world; ++i) {
                if ((code >> (w * per_world + i)) & 1u) bits |= std::uint64_t{1} << free[i];
            }
            fr.set_bits(w, bits);
        }
        if (has_properties(fr, required) && !visit(fr)) return;
    }
}

std::vector<NBFrame> enumerate_frames(std::size_t worlds, const std::vector<FrameProperty>& required) {
    std::vector<NBFrame> out;
    for_each_frame(worlds, required, [&](const NBFrame& fr) {
        out.push_back(fr);
        return true;
    });
    return out;
}

std::vector<FrameProperty> property_class(SystemId s) {
    switch (s) {
    case SystemId::GWF:
        return {};
    case SystemId::GWF_N:
        return {FrameProperty::Equivalence};
    case SystemId::GWF_N2:
        return {FrameProperty::SupersetEquivalence};
    case SystemId::GWFChat:
        return {FrameProperty::Upset};
    case SystemId::GWFDhat:
        return {FrameProperty::Downset};
    case SystemId::GWFI:
        return {FrameProperty::Transitivity};
    case SystemId::GWFC:
        return {FrameProperty::Intersection};
    case SystemId::GWFD:
        return {FrameProperty::Union};
    case SystemId::GWFCI:
        return {FrameProperty::Intersection, FrameProperty::Transitivity};
    case SystemId::GWFDI:
        return {FrameProperty::Union, FrameProperty::Transitivity};
    case SystemId::GF:
        return {FrameProperty::Intersection, FrameProperty::Union, FrameProperty::Transitivity};
    }
    return {};
}

std::optional<std::vector<FrameProperty>> property_class(std::string_view name) {
    if (auto s = system_from_name(name)) return property_class(*s);
    if (auto h = hilbert_system_from_name(name)) return property_class(alias(*h));
    return std::nullopt;
}

std::string render_set(WorldSet s, std::size_t worlds) {
    std::string out = "{";
    bool first = true;
    for (std::size_t w = 0; w < worlds; ++w) {
        if ((s >> w) & 1u) {
            if (!first) out += ",";
            out += std::to_string(w);
            first = false;
        }
    }
    return out + "}";
}

std::string render_model(const Countermodel& c) {
    const NBFrame& fr = c.model.frame;
    std::string out = "worlds: " + render_set(fr.full(), fr.worlds()) + "\n";
    out += "refuted at world " + std::to_string(c.world) + "\n";
    for (std::size_t w = 0; w < fr.worlds(); ++w) {
        out += "NB(" + std::to_string(w) + "):";
        bool any = false;
        for (WorldSet x = 0; x <= fr.full(); ++x) {
            for (WorldSet y = 0; y <= fr.full(); ++y) {
                if (!NBFrame::forced(x, y) && fr.contains(w, x, y)) {
                    out += " (" + render_set(x, fr.worlds()) + "," + render_set(y, fr.worlds()) + ")";
                    any = true;
                }
            }
        }
        out += any ? "\n" : " only X subset of Y\n";
    }
    for (const auto& [atom, set] : c.model.valuation) {
        out += "V(" + atom + ") = " + render_set(set, fr.worlds()) + "\n";
    }
    return out;
}

}  // namespace subint
