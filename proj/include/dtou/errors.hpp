// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace dtou {

/// Base class for all engine errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Turtle syntax error with source position.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : Error("parse error at " + std::to_string(line) + ":" +
              std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Structural error in a policy document: names the offending node and field.
class ModelError : public Error {
 public:
  ModelError(const std::string& msg, std::string node = "",
             std::string field = "")
      : Error(msg), node_(std::move(node)), field_(std::move(field)) {}

  const std::string& node() const { return node_; }
  const std::string& field() const { return field_; }

 private:
  std::string node_;
  std::string field_;
};

/// Raised when a derivation cannot be performed for an output port.
class DerivationError : public Error {
 public:
  DerivationError(const std::string& msg, std::string port)
      : Error(msg), port_(std::move(port)) {}

  const std::string& port() const { return port_; }

 private:
  std::string port_;
};

/// Filesystem / storage failure.
class StoreError : public Error {
 public:
  explicit StoreError(const std::string& msg) : Error(msg) {}
};

}  // namespace dtou
