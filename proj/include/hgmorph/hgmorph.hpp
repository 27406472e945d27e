#ifndef HGMORPH_HGMORPH_HPP
#define HGMORPH_HGMORPH_HPP

#include "hgmorph/bitset.hpp"
#include "hgmorph/composed.hpp"
#include "hgmorph/correspondence.hpp"
#include "hgmorph/dot.hpp"
#include "hgmorph/filters.hpp"
#include "hgmorph/format.hpp"
#include "hgmorph/grid.hpp"
#include "hgmorph/hypergraph.hpp"
#include "hgmorph/laws.hpp"
#include "hgmorph/oracle.hpp"
#include "hgmorph/pipeline.hpp"

#endif  // HGMORPH_HGMORPH_HPP
