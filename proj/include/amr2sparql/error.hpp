// Copyright 2026 The amr2sparql Authors.
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

#ifndef AMR2SPARQL_ERROR_HPP_
#define AMR2SPARQL_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace amr2sparql {

// Base class of every error raised by the library. `kind()` is the stable
// name used in reports and coverage histograms.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define AMR2SPARQL_DEFINE_ERROR(Name, Base)                         \
  class Name : public Base {                                        \
   public:                                                          \
    explicit Name(const std::string& message) : Base(#Name, message) {} \
                                                                    \
   protected:                                                       \
    Name(std::string kind, const std::string& message)              \
        : Base(std::move(kind), message) {}                         \
  };

// amr-core
AMR2SPARQL_DEFINE_ERROR(MalformedPenman, Error)
AMR2SPARQL_DEFINE_ERROR(DanglingAlignment, Error)
AMR2SPARQL_DEFINE_ERROR(NoPath, Error)

// align-rules
AMR2SPARQL_DEFINE_ERROR(DuplicateWiki, Error)

// transpiler-machine
AMR2SPARQL_DEFINE_ERROR(IllegalAction, Error)
AMR2SPARQL_DEFINE_ERROR(TooManyVariables, Error)

// kg-store
AMR2SPARQL_DEFINE_ERROR(UnsupportedConstruct, Error)
AMR2SPARQL_DEFINE_ERROR(UnboundProjection, Error)
AMR2SPARQL_DEFINE_ERROR(MalformedSparql, Error)

// decode
AMR2SPARQL_DEFINE_ERROR(MachineClosed, Error)
AMR2SPARQL_DEFINE_ERROR(EmptyStack, Error)

// Close requested while paths remain on the stack.
class NonEmptyStackAtClose : public IllegalAction {
 public:
  explicit NonEmptyStackAtClose(std::size_t depth)
      : IllegalAction("NonEmptyStackAtClose",
                      std::to_string(depth) + " path(s) left on the stack") {}
};

class MalformedLine : public Error {
 public:
  MalformedLine(std::size_t line_no, const std::string& message)
      : Error("MalformedLine",
              "line " + std::to_string(line_no) + ": " + message),
        line_no_(line_no) {}

  std::size_t line_no() const noexcept { return line_no_; }

 private:
  std::size_t line_no_;
};

#undef AMR2SPARQL_DEFINE_ERROR

}  // namespace amr2sparql

#endif  // AMR2SPARQL_ERROR_HPP_
