#pragma once

#include <stdexcept>
#include <string>

namespace cycgrp {

enum class Errc {
  // table validation
  NotSquare,
  NotClosed,
  NoIdentityAtZero,
  NotLatinSquare,
  NoInverse,
  NotAssociative,
  // subgroup / morphism contracts
  NotSubgroup,
  NotNormal,
  NotCentral,
  NotIsomorphism,
  NotAHomomorphism,
  NotBijective,
  GeneratorsDontGenerate,
  ActionNotHomomorphism,
  // everything else
  InvalidArgument,
  CapExceeded,
  SyntaxError,
  UnknownAtom,
  BadArity,
};

const char* errc_name(Errc code);

// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Thrown by the expression parser; position is a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(Errc code, std::size_t position, const std::string& what)
      : Error(code, what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace cycgrp
