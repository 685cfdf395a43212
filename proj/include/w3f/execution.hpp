#pragma once

namespace w3f {

// Serial paths are the reference implementations; parallel paths must agree exactly.
enum class Execution { serial, parallel };

}  // namespace w3f
