#ifndef SEMSIG_AUTOMATON_HPP
#define SEMSIG_AUTOMATON_HPP

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "semsig/encoder.hpp"

namespace semsig {

/// S is the start state, A/B/C accept (last segment flat / falling / rising),
/// D is the absorbing dead state.
enum class DfaState : std::uint8_t { S, A, B, C, D };

inline constexpr std::size_t kStateCount = 5;

std::string_view to_string(DfaState q) noexcept;
constexpr bool is_accepting(DfaState q) noexcept {
  return q == DfaState::A || q == DfaState::B || q == DfaState::C;
}

using TransitionTable = std::array<std::array<DfaState, kSymbolCount>, kStateCount>;

/// The reference transition table, written out literally: row per state,
/// column per symbol 1..13.
const TransitionTable& literal_transition_table() noexcept;

/// The same table rebuilt from the slope-compatibility rule. Must equal the
/// literal table; the unit tests hold both to that.
TransitionTable derived_transition_table() noexcept;

DfaState dfa_step(DfaState state, ConfigSymbol symbol) noexcept;

struct AcceptanceResult {
  bool accepted = false;
  DfaState final_state = DfaState::S;
  std::vector<DfaState> trace;  // state after each consumed symbol
  std::optional<std::size_t> rejection_index;  // first step into D

  friend bool operator==(const AcceptanceResult&, const AcceptanceResult&) = default;
};

AcceptanceResult dfa_accept(std::span<const ConfigSymbol> symbols);

/// True iff the last segment of `prev` has the slope sign of the first
/// segment of `next`.
bool compatible(ConfigSymbol prev, ConfigSymbol next) noexcept;

}  // namespace semsig

#endif  // SEMSIG_AUTOMATON_HPP
