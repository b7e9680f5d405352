#pragma once

#include <cstdint>
#include <optional>

#include "rmk/model.hpp"
#include "rmk/pattern.hpp"

namespace rmk {

enum class Outcome { Yes, No, Unknown };

struct OracleResult {
    Outcome outcome = Outcome::Unknown;
    std::optional<MinorModel> model;  // present iff outcome == Yes
    std::uint64_t nodes = 0;          // search nodes visited

    bool yes() const { return outcome == Outcome::Yes; }
    bool no() const { return outcome == Outcome::No; }
    bool unknown() const { return outcome == Outcome::Unknown; }
};

constexpr std::uint64_t kDefaultBudget = 50'000'000;

// Exhaustive branch-set search for a rooted minor. Branch sets grow from the
// roots first, then the unrooted pattern vertices are seeded smallest-vertex
// first; the first model in that fixed order is returned. Disconnected inputs
// are routed to the component holding all roots (definite no when the roots
// are split). The node budget turns the result into Unknown, never a wrong
// answer.
OracleResult find_rooted_minor(const RootedGraph& g, const Pattern& p,
                               std::uint64_t budget = kDefaultBudget);

// Minor containment with no root constraints.
OracleResult has_unrooted_minor(const Graph& g, const Graph& h,
                                std::uint64_t budget = kDefaultBudget);

}  // namespace rmk
