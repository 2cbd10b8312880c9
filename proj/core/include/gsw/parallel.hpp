#pragma once

#include <cstddef>
#include <functional>

namespace gsw {

/// Runs body(i) for i < count on up to `jobs` threads. Callers write results
/// into slots indexed by i, so the merged output does not depend on `jobs`.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& body);

}  // namespace gsw
