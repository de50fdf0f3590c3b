#pragma once

namespace hankelforge {

/// Worker count for OpenMP regions. `requested` <= 0 means the OpenMP
/// default; the HANKELFORGE_THREADS environment variable (integer >= 1)
/// caps the result. Returns 1 when built without OpenMP.
int effective_thread_count(int requested = 0);

}  // namespace hankelforge
