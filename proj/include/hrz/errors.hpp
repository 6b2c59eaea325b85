#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hrz {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
	using Error::Error;
};

class Singular : public Error {
public:
	using Error::Error;
};

class MissingProduct : public Error {
public:
	explicit MissingProduct(const std::string &name)
	    : Error("missing product '" + name + "'"), product_(name)
	{
	}
	const std::string &product() const noexcept { return product_; }

private:
	std::string product_;
};

/// Malformed input text. `position` is a byte offset or, for structural
/// errors, a JSON-pointer-like path rendered into the message.
class ParseError : public Error {
public:
	ParseError(std::size_t position, const std::string &message)
	    : Error("parse error at " + std::to_string(position) + ": " + message),
	      position_(position)
	{
	}
	explicit ParseError(const std::string &message)
	    : Error("parse error: " + message), position_(0)
	{
	}
	std::size_t position() const noexcept { return position_; }

private:
	std::size_t position_;
};

class UnboundParameter : public Error {
public:
	explicit UnboundParameter(const std::string &name)
	    : Error("unbound parameter '" + name + "'"), name_(name)
	{
	}
	const std::string &name() const noexcept { return name_; }

private:
	std::string name_;
};

class UnknownEntry : public Error {
public:
	explicit UnknownEntry(const std::string &id)
	    : Error("unknown catalog entry '" + id + "'")
	{
	}
};

/// Raised by strict-mode constructions whose hypotheses do not hold.
class PreconditionFailed : public Error {
public:
	using Error::Error;
};

class NotAnOOperator : public PreconditionFailed {
public:
	using PreconditionFailed::PreconditionFailed;
};

class NotACocycle : public PreconditionFailed {
public:
	using PreconditionFailed::PreconditionFailed;
};

} // namespace hrz
