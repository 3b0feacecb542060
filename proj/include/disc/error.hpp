#pragma once

#include <stdexcept>
#include <string>

namespace disc {

enum class Errc {
  BadInput,
  NotStronglyConnected,
  NotStronglyBiconnected,
  NotConnected,
  VertexNotInComponent,
  NoSuchEdge,
  TargetOccupied,
  InvalidPlan,
  VertexNotHole,
  Unreachable,
  NoHoleOnCycle,
  NoHoles,
  TooFewHoles,
  NotAttached,
  WrongKind,
  NotJoinedByArticulationPoint,
  InfeasibleInstance,
  InfeasibleSwap,
  InvalidIntermediate,
  DegenerateParams,
  TooManyAgents,
  StateSpaceTooLarge,
};

const char* errc_name(Errc c);

// Every library failure goes through this type. move_index is set when a
// plan fails part way through.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, int move_index = -1)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code),
        move_index_(move_index) {}

  Errc code() const { return code_; }
  int move_index() const { return move_index_; }

 private:
  Errc code_;
  int move_index_;
};

}  // namespace disc
