#ifndef WEILFORM_CLI_HPP
#define WEILFORM_CLI_HPP

namespace weilform {

// Entry point of the weilform tool.  Exit codes: 0 all checks pass,
// 1 a mathematical check failed, 2 malformed input or usage error.
int cli_dispatch(int argc, const char* const* argv);

}  // namespace weilform

#endif
