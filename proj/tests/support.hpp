#pragma once

#include "arithvol/cli.hpp"
#include "arithvol/corpus.hpp"

#include <doctest.h>

namespace arithvol::testing {

inline CorpusFile const & starter()
{
    static CorpusFile const c = ingest_corpus(cli::starter_corpus_path(), true);
    return c;
}

inline NumberField const & field(std::string const & label)
{
    auto f = starter().find_field(label);
    REQUIRE_MESSAGE(f, label);
    return *f;
}

inline FieldPtr field_ptr(std::string const & label)
{
    auto f = starter().find_field(label);
    REQUIRE_MESSAGE(f, label);
    return f;
}

inline QuaternionAlgebra const & algebra(std::string const & label)
{
    auto a = starter().find_algebra(label);
    REQUIRE_MESSAGE(a, label);
    return *a;
}

inline ZPoly zpoly(std::initializer_list<long> c)
{
    ZPoly f;
    for (long x : c)
        f.emplace_back(x);
    return f;
}

} // namespace arithvol::testing
