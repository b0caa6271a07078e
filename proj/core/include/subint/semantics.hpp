#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "subint/calculus.hpp"

namespace subint {

/// Set of worlds as a bitmask over {0..n-1}.
using WorldSet = std::uint32_t;

enum class FrameProperty { Intersection, Union, Transitivity, Upset, Downset, Equivalence, SupersetEquivalence };

std::string_view property_name(FrameProperty p);
std::optional<FrameProperty> property_from_name(std::string_view name);
const std::vector<FrameProperty>& all_properties();

/// NB-neighbourhood frame on at most three worlds. Pairs (X, Y) with X a
/// subset of Y belong to every world's neighbourhood.
class NBFrame {
public:
    static constexpr std::size_t max_worlds = 3;

    explicit NBFrame(std::size_t worlds);

    std::size_t worlds() const noexcept { return worlds_; }
    WorldSet full() const noexcept { return (WorldSet{1} << worlds_) - 1; }

    bool contains(std::size_t w, WorldSet x, WorldSet y) const;
    void insert(std::size_t w, WorldSet x, WorldSet y);
    /// Throws for forced pairs.
    void erase(std::size_t w, WorldSet x, WorldSet y);

    static bool forced(WorldSet x, WorldSet y) noexcept { return (x & ~y) == 0; }
    std::size_t pair_index(WorldSet x, WorldSet y) const noexcept { return (x << worlds_) | y; }
    std::uint64_t bits(std::size_t w) const { return nb_.at(w); }
    void set_bits(std::size_t w, std::uint64_t bits);

    friend bool operator==(const NBFrame&, const NBFrame&) = default;

private:
    std::size_t worlds_;
    std::vector<std::uint64_t> nb_;
};

struct NBModel {
    NBFrame frame;
    std::map<std::string, WorldSet> valuation;
};

/// Worlds of the model where the formula holds.
WorldSet truth_set(const NBModel& m, const Formula& f);
bool valid_in_model(const NBModel& m, const Formula& f);

/// Exact check over all tuples of worlds and subsets.
bool has_property(const NBFrame& fr, FrameProperty p);
bool has_properties(const NBFrame& fr, const std::vector<FrameProperty>& ps);

/// Every frame on one or two worlds, filtered by the required properties.
std::vector<NBFrame> enumerate_frames(std::size_t worlds, const std::vector<FrameProperty>& required = {});
void for_each_frame(std::size_t worlds, const std::vector<FrameProperty>& required,
                    const std::function<bool(const NBFrame&)>& visit);

/// Properties characterizing a logic, keyed by sequent or Hilbert system name.
std::optional<std::vector<FrameProperty>> property_class(std::string_view name);
std::vector<FrameProperty> property_class(SystemId s);

struct CountermodelConfig {
    std::size_t max_worlds = 2;
    std::size_t max_atoms = 3;
};

struct Countermodel {
    NBModel model;
    std::size_t world;
};

/// Lazy search over neighbourhood bits; returns a model of the class
/// refuting f at some world, or nullopt when none exists within the budget.
std::optional<Countermodel> countermodel(const std::vector<FrameProperty>& properties, const Formula& f,
                                         const CountermodelConfig& cfg = {});

/// Plain enumeration of frames and valuations (one or two worlds).
std::optional<Countermodel> countermodel_exhaustive(const std::vector<FrameProperty>& properties, const Formula& f,
                                                    const CountermodelConfig& cfg = {});

/// Text listing of worlds, non-forced neighbourhood pairs and valuation.
std::string render_model(const Countermodel& c);
std::string render_set(WorldSet s, std::size_t worlds);

}  // namespace subint
