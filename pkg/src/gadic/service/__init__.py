"""HTTP face of the package: pydantic schemas and the FastAPI app."""
