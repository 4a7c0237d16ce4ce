#ifndef CNL_ERROR_HPP
#define CNL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cnl {

// Domain error with a stable machine-readable code; the CLI prints
// "error: <code>: <message>" and exits 1.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& message)
      : Error("syntax", message + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class UnknownAtomError : public Error {
 public:
  explicit UnknownAtomError(const std::string& atom)
      : Error("unknown-atom", "atom '" + atom + "' has no valuation") {}
};

class UnknownAgentError : public Error {
 public:
  explicit UnknownAgentError(const std::string& agent)
      : Error("unknown-agent", "agent '" + agent + "' is not declared by the model") {}
};

class UnsupportedLanguageError : public Error {
 public:
  explicit UnsupportedLanguageError(const std::string& message)
      : Error("unsupported-language", message) {}
};

class EmptyExtensionError : public Error {
 public:
  explicit EmptyExtensionError(const std::string& message)
      : Error("empty-extension", message) {}
};

class SizeCapError : public Error {
 public:
  explicit SizeCapError(const std::string& message) : Error("size-cap", message) {}
};

class ModelFormatError : public Error {
 public:
  explicit ModelFormatError(const std::string& message) : Error("invalid-model", message) {}
};

class ParameterError : public Error {
 public:
  explicit ParameterError(const std::string& message) : Error("invalid-parameter", message) {}
};

}  // namespace cnl

#endif  // CNL_ERROR_HPP
