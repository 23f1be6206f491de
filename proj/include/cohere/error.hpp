#pragma once

#include <stdexcept>
#include <string>

namespace cohere {

/**
 * \brief Validation or construction failure.
 *
 * `kind` is a stable identifier such as "NonAssociative" or "LevelFail";
 * `witness` names the offending elements.
 */
class Error : public std::runtime_error {
public:
    Error(std::string kind, std::string witness)
        : std::runtime_error(kind + "(" + witness + ")"), kind_(std::move(kind)), witness_(std::move(witness)) {}

    const std::string& kind() const noexcept { return kind_; }
    const std::string& witness() const noexcept { return witness_; }

private:
    std::string kind_;
    std::string witness_;
};

[[noreturn]] inline void fail(std::string kind, std::string witness = {}) {
    throw Error(std::move(kind), std::move(witness));
}

}  // namespace cohere
