"""Request/response layer: pydantic schemas, handlers, and the FastAPI app."""
