#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qboost {

enum class ErrorKind {
    InvalidArgument,
    AccardiUndefined,
    BoostUndefined,
    EmptyArm,
    ArmStarvation,
    MalformedInput,
    IoFailure,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// The Accardi ratio has a vanishing denominator: the term does not
// discriminate relevant from non-relevant documents.
class AccardiUndefined : public Error {
public:
    explicit AccardiUndefined(const std::string& what)
        : Error(ErrorKind::AccardiUndefined, what) {}
};

class BoostUndefined : public Error {
public:
    explicit BoostUndefined(const std::string& what)
        : Error(ErrorKind::BoostUndefined, what) {}
};

class EmptyArm : public Error {
public:
    explicit EmptyArm(const std::string& what) : Error(ErrorKind::EmptyArm, what) {}
};

class ArmStarvation : public Error {
public:
    explicit ArmStarvation(const std::string& what)
        : Error(ErrorKind::ArmStarvation, what) {}
};

class MalformedInput : public Error {
public:
    explicit MalformedInput(const std::string& what)
        : Error(ErrorKind::MalformedInput, what) {}
};

class IoFailure : public Error {
public:
    explicit IoFailure(const std::string& what) : Error(ErrorKind::IoFailure, what) {}
};

class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& what)
        : Error(ErrorKind::InvalidArgument, what) {}
};

}  // namespace qboost
