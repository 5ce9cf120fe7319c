from fastapi import APIRouter, Request

router = APIRouter(tags=["health"])


@router.get("/healthz")
def healthz(request: Request):
    s = request.app.state.settings
    return {
        "status": "ok",
        "service": "chromacover",
        "version": "0.1.0",
        "limits": {
            "exact_vertex_limit": s.exact_vertex_limit,
            "allow_large": s.allow_large,
            "switching_class_limit": s.switching_class_limit,
            "class_budget": s.class_budget,
            "search_budget": s.search_budget,
        },
    }
