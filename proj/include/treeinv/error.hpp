#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace treeinv {

enum class errc {
    invalid_order,
    wrong_edge_count,
    disconnected,
    self_loop,
    duplicate_edge,
    id_out_of_range,
    entry_out_of_range,
    invalid_parameters,
    not_a_subtree_cut,
    order_too_large,
    infeasible_filter,
    unknown_claim,
    unknown_statistic,
    parse_failure,
    io_failure,
};

constexpr std::string_view to_string(errc e) noexcept {
    switch (e) {
    case errc::invalid_order: return "InvalidOrder";
    case errc::wrong_edge_count: return "WrongEdgeCount";
    case errc::disconnected: return "Disconnected";
    case errc::self_loop: return "SelfLoop";
    case errc::duplicate_edge: return "DuplicateEdge";
    case errc::id_out_of_range: return "IdOutOfRange";
    case errc::entry_out_of_range: return "EntryOutOfRange";
    case errc::invalid_parameters: return "InvalidParameters";
    case errc::not_a_subtree_cut: return "NotASubtreeCut";
    case errc::order_too_large: return "OrderTooLarge";
    case errc::infeasible_filter: return "InfeasibleFilter";
    case errc::unknown_claim: return "UnknownClaim";
    case errc::unknown_statistic: return "UnknownStatistic";
    case errc::parse_failure: return "ParseFailure";
    case errc::io_failure: return "IoFailure";
    }
    return "Unknown";
}

// Single exception type for the library; callers branch on code().
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

} // namespace treeinv
