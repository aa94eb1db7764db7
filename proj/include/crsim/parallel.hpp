/*
 * Copyright (c) 2026 crsim authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef CRSIM_PARALLEL_HPP
#define CRSIM_PARALLEL_HPP

#include <cstdint>
#include <functional>

namespace crsim {

/// Worker count: the CRSIM_WORKERS environment variable when set, otherwise
/// the hardware concurrency.
int worker_count();

/// Run fn(block) for block = 0..n_blocks-1 on up to `workers` threads
/// (0: worker_count()). Blocks must write only to their own slots; callers
/// reduce the per-block results in index order, which keeps every experiment
/// bit-identical for any worker count.
void parallel_for_blocks(std::uint64_t n_blocks, int workers,
                         const std::function<void(std::uint64_t)>& fn);

} // namespace crsim

#endif
