#include "ptk/verdict.hh"

namespace ptk {

std::string_view witness_kind(const Witness& w) {
    static constexpr std::string_view kNames[] = {"word", "cycle", "ums-violations", "confluence-failure",
                                                  "identity-failure", "kpt-counterexample", "unary-pattern"};
    static_assert(std::size(kNames) == std::variant_size_v<Witness>);
    return kNames[w.index()];
}

} // namespace ptk
