#pragma once

#include "arithvol/numfield.hpp"
#include "arithvol/quatalg.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace arithvol {

inline constexpr char const * corpus_format_version = "1";

struct RawAlgebra {
    std::string label;
    std::string field;
    std::vector<int> ram_inf;
    std::vector<RamifiedPrimeSpec> ram_f;
};

struct CorpusFile {
    std::string version;
    std::vector<FieldPtr> fields;            // corpus order
    std::vector<QuaternionAlgebra> algebras;
    std::vector<RawAlgebra> raw_algebras;    // parallel to algebras
    std::vector<std::string> warnings;

    FieldPtr find_field(std::string const & label) const;
    QuaternionAlgebra const * find_algebra(std::string const & label) const;
};

struct CorpusIssue {
    std::string location;   // e.g. "fields[3]"
    std::string label;
    std::string message;
};

/* Malformed input: unreadable file, bad JSON, wrong types. */
struct corpus_parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* Well-formed input whose records violate invariants; lists every issue. */
struct corpus_validation_error : std::runtime_error {
    std::vector<CorpusIssue> issues;
    explicit corpus_validation_error(std::vector<CorpusIssue> issues);
};

/* strict: unknown keys are errors instead of warnings */
CorpusFile parse_corpus(nlohmann::json const & doc, bool strict = false);
CorpusFile ingest_corpus(std::string const & path, bool strict = false);

/* canonical re-serialization of a validated corpus */
nlohmann::ordered_json normalized_corpus(CorpusFile const & corpus);

} // namespace arithvol
