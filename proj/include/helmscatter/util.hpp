#pragma once

#include <functional>

namespace helm {

// global worker count for assembly loops (>= 1)
void set_threads(int n);
int threads();

// static row partition over [0, n)
void parallel_for(int n, const std::function<void(int, int)>& body);

} // namespace helm
