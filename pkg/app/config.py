# app/config.py

API_TITLE = "Butson Morphisms Backend"
API_VERSION = "0.2.0"

# Envolvente de la aritmética exacta
MAX_ROOT_ORDER = 10000
MAX_COUNT = 2**20
MAX_MATRIX_ORDER = 4096
INT64_GUARD = 2**62

# Re-verificación de salidas de reduce_once / reduce_full
CHECK_REDUCTIONS = False

LOG_LEVEL = "WARNING"
LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"

# Celdas (filas x k) por bloque de conteos en verify
VERIFY_CHUNK_CELLS = 2**22
