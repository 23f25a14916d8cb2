from fastapi import FastAPI
import config
from controllers.pfaffian_controller import router as pfaffian_router
from controllers.apps_controller import router as apps_router
from controllers.health_check_controller import router as health_check_router
from fastapi.middleware.cors import CORSMiddleware
from utils.logging_config import configure_logging

configure_logging()

app = FastAPI(
    title=config.settings.api_title,
    description="Pfaffian orientations of bipartite graphs, Pólya matrices, even digraphs and sign-nonsingular matrices",
    version=config.settings.api_version,
)

# Add CORS middleware
app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)


@app.get("/")
def read_root():
    return {"message": "Welcome to the Pfaffian Orientation API"}

# Include the Pfaffian orientation router
app.include_router(pfaffian_router, prefix="/api/v1")

# Include the applications router
app.include_router(apps_router, prefix="/api/v1")

# Include the health check router
app.include_router(health_check_router, prefix="/api/v1")
