#pragma once

#include "bcpa/algebra.hpp"
#include "bcpa/construction.hpp"
#include "bcpa/correlation.hpp"
#include "bcpa/errors.hpp"
#include "bcpa/io.hpp"
#include "bcpa/ndarray.hpp"
#include "bcpa/sequence.hpp"
