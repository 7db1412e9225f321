#pragma once

#include "siglap/annular.hpp"
#include "siglap/braid.hpp"
#include "siglap/errors.hpp"
#include "siglap/int_matrix.hpp"
#include "siglap/io.hpp"
#include "siglap/laurent.hpp"
#include "siglap/link_diagram.hpp"
#include "siglap/mahler.hpp"
#include "siglap/periodic.hpp"
#include "siglap/plane_graph.hpp"
#include "siglap/signed_graph.hpp"
#include "siglap/smith.hpp"
