#pragma once

namespace tardy {

__extension__ typedef __int128 Int128;

}  // namespace tardy
