#pragma once

#include "contact_tori/bigint.hpp"
#include "contact_tori/census.hpp"
#include "contact_tori/cone.hpp"
#include "contact_tori/cone_equiv.hpp"
#include "contact_tori/contact_checks.hpp"
#include "contact_tori/error.hpp"
#include "contact_tori/io.hpp"
#include "contact_tori/join.hpp"
#include "contact_tori/lattice.hpp"
#include "contact_tori/polygon_gysin.hpp"
#include "contact_tori/weighted_links.hpp"
