#pragma once

namespace cogail {

// Keeps large temporaries on the heap free lists instead of returning
// them to the OS after every minibatch. No-op outside glibc.
void tune_allocator();

}  // namespace cogail
