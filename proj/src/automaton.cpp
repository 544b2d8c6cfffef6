#include "semsig/automaton.hpp"

namespace semsig {

namespace {

constexpr DfaState S = DfaState::S;
constexpr DfaState A = DfaState::A;
constexpr DfaState B = DfaState::B;
constexpr DfaState C = DfaState::C;
constexpr DfaState D = DfaState::D;

//                                     1  2  3  4  5  6  7  8  9 10 11 12 13
constexpr TransitionTable kLiteral = {{{B, C, C, B, C, B, C, B, A, C, B, A, A},   // S
                                       {D, D, D, D, D, D, D, D, A, C, B, D, D},   // A
                                       {B, D, D, B, C, D, D, B, D, D, D, D, A},   // B
                                       {D, C, C, D, D, B, C, D, D, D, D, A, D},   // C
                                       {D, D, D, D, D, D, D, D, D, D, D, D, D}}}; // D

constexpr std::size_t row(DfaState q) { return static_cast<std::size_t>(q); }

DfaState slope_state(Sign s) {
  switch (s) {
    case Sign::Zero: return A;
    case Sign::Negative: return B;
    case Sign::Positive: return C;
  }
  return D;
}

}  // namespace

std::string_view to_string(DfaState q) noexcept {
  switch (q) {
    case DfaState::S: return "S";
    case DfaState::A: return "A";
    case DfaState::B: return "B";
    case DfaState::C: return "C";
    case DfaState::D: return "D";
  }
  return "?";
}

const TransitionTable& literal_transition_table() noexcept { return kLiteral; }

TransitionTable derived_transition_table() noexcept {
  TransitionTable table{};
  for (DfaState q : {S, A, B, C, D}) {
    for (ConfigSymbol sym : kAllSymbols) {
      const SignTriple t = triple_of(sym);
      DfaState next = D;
      if (q == S || (q != D && slope_state(t.d_back) == q)) {
        next = slope_state(t.d_fwd);
      }
      table[row(q)][slot(sym)] = next;
    }
  }
  return table;
}

DfaState dfa_step(DfaState state, ConfigSymbol symbol) noexcept {
  return kLiteral[row(state)][slot(symbol)];
}

AcceptanceResult dfa_accept(std::span<const ConfigSymbol> symbols) {
  AcceptanceResult r;
  r.trace.reserve(symbols.size());
  DfaState q = S;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    q = dfa_step(q, symbols[i]);
    if (q == D && !r.rejection_index) r.rejection_index = i;
    r.trace.push_back(q);
  }
  r.final_state = q;
  r.accepted = !r.trace.empty() && is_accepting(q);
  return r;
}

bool compatible(ConfigSymbol prev, ConfigSymbol next) noexcept {
  return triple_of(prev).d_fwd == triple_of(next).d_back;
}

}  // namespace semsig
