"""
Constants for the landau-clusters command line.
"""

# Application metadata
APP_NAME = "landau-clusters"
APP_DESCRIPTION = "Eigenvalue clusters of the Landau Hamiltonian: Green kernel, capacity, Toeplitz spectra and boundary operators"

# Exit statuses
EXIT_SUCCESS = 0
EXIT_INTERRUPTED = 1
EXIT_CONFIGURATION_ERROR = 2
EXIT_NUMERICAL_ERROR = 3

# Commands and their subcommands (None: the command takes no subcommand)
COMMANDS = {
    'landau': ('level',),
    'green': ('profile', 'coeffs', 'audit'),
    'capacity': None,
    'toeplitz': ('spectrum', 'counting', 'limit'),
    'bie': ('assemble', 'jump', 'dtr', 'generic', 'represent'),
}

# File names
DEFAULT_OUTPUT_PREFIX = "landau_clusters"
