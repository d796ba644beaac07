#pragma once

namespace semirandom::cli {

int dispatch(int argc, char** argv);

}  // namespace semirandom::cli
