#ifndef VACQ_PARALLEL_HPP
#define VACQ_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace vacq {

/// Worker cap: min(hardware_concurrency, VACUUM_CHARGE_THREADS if set), >= 1.
std::size_t worker_count();

/// Runs body(i) for i in [0, n). Work items must be independent; callers get
/// determinism by writing into per-index slots and reducing in index order
/// afterwards. Nested calls run serially so worker counts never multiply.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

} // namespace vacq

#endif
