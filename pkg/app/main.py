# app/main.py
from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware
from app.api.routes_basic import router as basic_router
from app.api.routes_matrices import router as matrices_router
from app.api.routes_reduction import router as reduction_router
from app.config import API_TITLE, API_VERSION

app = FastAPI(
    title=API_TITLE,
    version=API_VERSION,
)

# CORS totalmente abierto
app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=False,
    allow_methods=["*"],
    allow_headers=["*"],
)

# Routers
app.include_router(basic_router)
app.include_router(matrices_router, prefix="/api")
app.include_router(reduction_router, prefix="/api")
