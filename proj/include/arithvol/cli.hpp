#pragma once

#include <string>
#include <vector>

namespace arithvol::cli {

enum exit_code : int {
    success = 0,
    hard_error = 1,
    validation_failure = 2,
    chain_failure = 3,
};

struct CommandResult {
    std::string out;
    std::string err;
    int status = success;
};

/* argv excludes the program name */
CommandResult run_command(std::vector<std::string> const & argv);

/* path of the corpus shipped with the sources */
std::string starter_corpus_path();

} // namespace arithvol::cli
