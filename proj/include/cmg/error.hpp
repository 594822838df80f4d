#ifndef CMG_ERROR_HPP
#define CMG_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace cmg {

enum class Errc {
    LoopEdge,
    UnknownNode,
    BlockedStart,
    NotAChainGraph,
    NotACMG,
    NotAnAnG,
    MalformedQuery,
    BoundTooSmall,
    TooLarge,
    GroundSetMismatch,
    InvalidConfig,
    Parse,
};

std::string_view to_string(Errc code);

/// The single exception type thrown by the library; `code()` identifies the
/// failure for callers that need to branch on it (the CLI maps codes to exit
/// statuses).
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace cmg

#endif  // CMG_ERROR_HPP
