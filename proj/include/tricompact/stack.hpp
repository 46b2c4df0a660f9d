#pragma once

#include <cstddef>
#include <functional>

namespace tricompact {

// Runs fn on a thread with the given stack size and waits for it. Exceptions
// thrown by fn are rethrown in the caller.
void run_with_stack(std::size_t bytes, const std::function<void()>& fn);

}  // namespace tricompact
