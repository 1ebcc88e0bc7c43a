#pragma once

#include <stdexcept>
#include <string>

namespace coinfrac {

/// Thrown when a computation would exceed its configured work cap.
class ResourceCapError : public std::runtime_error {
public:
    explicit ResourceCapError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown on file read/write failures.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace coinfrac
