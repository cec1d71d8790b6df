#ifndef MBPNS_MBPNS_HPP_
#define MBPNS_MBPNS_HPP_

#include "mbpns/error.hpp"
#include "mbpns/geometry.hpp"
#include "mbpns/io.hpp"
#include "mbpns/parallel.hpp"
#include "mbpns/rational.hpp"
#include "mbpns/reconstruct.hpp"
#include "mbpns/sampling.hpp"
#include "mbpns/signal.hpp"
#include "mbpns/stability.hpp"
#include "mbpns/vandermonde.hpp"

#endif  // MBPNS_MBPNS_HPP_
