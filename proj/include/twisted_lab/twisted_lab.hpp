#pragma once

#include "twisted_lab/blocks.hpp"
#include "twisted_lab/cantor.hpp"
#include "twisted_lab/centralizer.hpp"
#include "twisted_lab/defect.hpp"
#include "twisted_lab/dissociate.hpp"
#include "twisted_lab/fft.hpp"
#include "twisted_lab/group.hpp"
#include "twisted_lab/harmonic.hpp"
#include "twisted_lab/io.hpp"
#include "twisted_lab/profile.hpp"
#include "twisted_lab/riesz.hpp"
#include "twisted_lab/sampling.hpp"
#include "twisted_lab/twisted_sum.hpp"
