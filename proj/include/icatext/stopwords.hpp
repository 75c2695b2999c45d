#pragma once

#include <string>
#include <vector>

namespace icatext {

// Version tag of the shipped stop-word list; bumped whenever the list
// changes so runs can be tied to the exact list used.
extern const char* const kStopWordListVersion;

const std::vector<std::string>& default_stop_words();

}  // namespace icatext
