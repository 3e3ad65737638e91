"""Published encodings (rounded to two decimals) used as search targets."""
import numpy as np

# six-vertex theta pair: LapPE, trivial vector skipped, k = 2
THETA_LAP_K = np.array([[-.50, -.32], [-.50, .32], [0, .53], [0, -.53], [.50, -.32], [.50, .32]])
THETA_LAP_KP = np.array([[-.37, 0], [-.17, .62], [-.37, 0], [-.17, -.62], [.58, -.35], [.58, .35]])

# same pair: random-walk return probabilities, k = 2
THETA_RW_K = np.array([[0, .41], [0, .41], [0, .44], [0, .44], [0, .41], [0, .41]])
THETA_RW_KP = np.array([[0, .33], [0, .50], [0, .33], [0, .50], [0, .41], [0, .41]])

# ten-cycle and two five-cycles: random walk, k = 4 (every row identical)
CYCLE_RW = np.tile([0, .50, 0, .37], (10, 1))

# ten-vertex pair with two degree-3 vertices: LapPE, trivial skipped, k = 2
BRIDGE_LAP_G = np.array([[-.42, -.18], [-.42, .18], [-.26, .39], [0, .34], [.26, .39],
                         [.42, .18], [.42, -.18], [.26, -.39], [0, -.34], [-.26, -.39]])
BRIDGE_LAP_GP = np.array([[-.37, .35], [-.37, .35], [-.29, -.05], [-.19, -.49], [-.29, -.05],
                          [.19, -.49], [.29, -.05], [.37, .35], [.37, .35], [.29, -.05]])

# same pair: random walk, k = 5
_A, _B, _C = [0, .50, 0, .35], [0, .41, 0, .28], [0, .44, 0, .31]
BRIDGE_RW_G = np.array([r + [0] for r in (_A, _A, _B, _C, _B, _A, _A, _B, _C, _B)])
BRIDGE_RW_GP = np.array([r + [.04] for r in (_A, _A, _B, _C, _B, _C, _B, _A, _A, _B)])

# cospectral 4-regular pair: random walk, k = 4, third column as printed
_P, _Q = [0, .25, .62, .14], [0, .25, .93, .14]
QUARTIC_RW_K = np.array([_P, _P, _P, _Q, _Q, _P, _P, _Q, _P, _Q])
QUARTIC_RW_KP = np.array([_Q, _P, _Q, _Q, _Q, _P, _P, _P, _P, _P])


def quartic_rescaled(target: np.ndarray) -> np.ndarray:
    """Printed third column is ten times the 3-step return probability."""
    out = target.copy()
    out[:, 2] /= 10.0
    return out
