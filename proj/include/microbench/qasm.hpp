#pragma once

#include <string>
#include <string_view>

#include "microbench/circuit.hpp"
#include "microbench/error.hpp"

namespace microbench::qasm {

using QasmDocument = std::string;

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

/// OpenQASM 2.0 subset: version header, qelib1 include, a single qreg, one
/// statement per gate using standard qelib names, angles at 17 significant
/// digits.
QasmDocument emit(const Circuit& c);

/// Accepts exactly the emit subset plus whitespace, "//" comments and
/// constant angle expressions (k*pi/m, pi/m, -pi, decimal literals). Returns
/// a validated circuit; anything else raises ParseError with a line number.
Circuit parse(std::string_view text);

}  // namespace microbench::qasm
