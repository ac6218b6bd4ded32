// Copyright 2026 The lcadag Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lcadag {

enum class ErrorCode {
  CycleDetected,
  UnknownVertex,
  DuplicateLabel,
  EmptyLabel,
  EmptyGraph,
  NotALeaf,
  EmptyQuery,
  ElementNotInGround,
  EmptyGround,
  EmptyMember,
  EmptyFamily,
  InvalidArity,
  IncompleteTable,
  EmptyTransitSet,
  UncoveredTuple,
  KlcaViolation,
  LeafSetTooLarge,
  BoundExceeded,
  TooManyMembers,
  UnknownTheorem,
  UnknownProperty,
  MissingK,
  FixtureAssertionFailed,
  ParseError,
  InvalidArgument,
};

inline std::string_view to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::EmptyLabel: return "EmptyLabel";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::NotALeaf: return "NotALeaf";
    case ErrorCode::EmptyQuery: return "EmptyQuery";
    case ErrorCode::ElementNotInGround: return "ElementNotInGround";
    case ErrorCode::EmptyGround: return "EmptyGround";
    case ErrorCode::EmptyMember: return "EmptyMember";
    case ErrorCode::EmptyFamily: return "EmptyFamily";
    case ErrorCode::InvalidArity: return "InvalidArity";
    case ErrorCode::IncompleteTable: return "IncompleteTable";
    case ErrorCode::EmptyTransitSet: return "EmptyTransitSet";
    case ErrorCode::UncoveredTuple: return "UncoveredTuple";
    case ErrorCode::KlcaViolation: return "KlcaViolation";
    case ErrorCode::LeafSetTooLarge: return "LeafSetTooLarge";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::TooManyMembers: return "TooManyMembers";
    case ErrorCode::UnknownTheorem: return "UnknownTheorem";
    case ErrorCode::UnknownProperty: return "UnknownProperty";
    case ErrorCode::MissingK: return "MissingK";
    case ErrorCode::FixtureAssertionFailed: return "FixtureAssertionFailed";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

// All library failures. `witness` carries the labels that explain the error
// (the cycle for CycleDetected, the uncovered tuple for UncoveredTuple, ...).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::vector<std::string> witness = {})
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        witness_(std::move(witness)) {}

  ErrorCode code() const { return code_; }
  const std::vector<std::string>& witness() const { return witness_; }

 private:
  ErrorCode code_;
  std::vector<std::string> witness_;
};

// Input-format errors carry a 1-based line and column.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(ErrorCode::ParseError,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace lcadag
