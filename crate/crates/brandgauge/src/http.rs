//! JSON HTTP API over a shared, immutable [`Engine`].

use std::sync::Arc;

use axum::body::Bytes;
use axum::extract::{DefaultBodyLimit, Path, State};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::json;

use crate::engine::Engine;
use crate::Error;

/// An error response: `{"error": message, "field"?: path}`.
#[derive(Debug)]
pub struct ApiError {
    status: StatusCode,
    message: String,
    field: Option<String>,
}

impl ApiError {
    fn bad_request(message: impl Into<String>, field: Option<String>) -> Self {
        ApiError { status: StatusCode::BAD_REQUEST, message: message.into(), field }
    }
}

impl From<Error> for ApiError {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::UnknownCompany(_) => StatusCode::NOT_FOUND,
            Error::Io { .. } => StatusCode::INTERNAL_SERVER_ERROR,
            _ => StatusCode::BAD_REQUEST,
        };
        ApiError { status, message: e.to_string(), field: None }
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        let mut body = json!({ "error": self.message });
        if let Some(f) = self.field {
            body["field"] = f.into();
        }
        (self.status, Json(body)).into_response()
    }
}

/// Parses a JSON body, reporting the path of the offending field.
fn parse_body<T: DeserializeOwned>(body: &Bytes) -> Result<T, ApiError> {
    let de = &mut serde_json::Deserializer::from_slice(body);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let field = (path != ".").then_some(path);
        ApiError::bad_request(e.into_inner().to_string(), field)
    })
}

type AppState = Arc<Engine>;

async fn run<Req, Resp>(
    engine: AppState,
    body: Bytes,
    f: impl FnOnce(&Engine, &Req) -> crate::Result<Resp> + Send + 'static,
) -> Result<Json<Resp>, ApiError>
where
    Req: DeserializeOwned + Send + 'static,
    Resp: Serialize + Send + 'static,
{
    let req: Req = parse_body(&body)?;
    // scoring is CPU-bound; keep it off the async workers
    let out = tokio::task::spawn_blocking(move || f(&engine, &req))
        .await
        .map_err(|e| ApiError { status: StatusCode::INTERNAL_SERVER_ERROR, message: e.to_string(), field: None })?;
    Ok(Json(out?))
}

async fn healthz(State(engine): State<AppState>) -> impl IntoResponse {
    Json(json!({ "status": "ok", "bundle_version": engine.bundle_version() }))
}

async fn analyze(State(engine): State<AppState>, body: Bytes) -> Response {
    run(engine, body, Engine::analyze).await.into_response()
}

async fn score(State(engine): State<AppState>, body: Bytes) -> Response {
    run(engine, body, Engine::score).await.into_response()
}

async fn consistency(State(engine): State<AppState>, body: Bytes) -> Response {
    run(engine, body, Engine::consistency).await.into_response()
}

async fn rank(State(engine): State<AppState>, body: Bytes) -> Response {
    run(engine, body, Engine::rank).await.into_response()
}

async fn profile(State(engine): State<AppState>, Path(company): Path<String>) -> Response {
    match engine.profile(&company) {
        Ok(p) => Json(json!({ "profile": p, "bundle_version": engine.bundle_version() })).into_response(),
        Err(e) => ApiError::from(e).into_response(),
    }
}

pub fn router(engine: Arc<Engine>) -> Router {
    let limit = engine.config().max_body_bytes;
    Router::new()
        .route("/healthz", get(healthz))
        .route("/v1/analyze", post(analyze))
        .route("/v1/score", post(score))
        .route("/v1/consistency", post(consistency))
        .route("/v1/rank", post(rank))
        .route("/v1/profiles/{company}", get(profile))
        .layer(DefaultBodyLimit::max(limit))
        .with_state(engine)
}

/// Serves until ctrl-c.
pub async fn serve(engine: Arc<Engine>, addr: &str) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(addr).await?;
    eprintln!("listening on {}", listener.local_addr()?);
    axum::serve(listener, router(engine))
        .with_graceful_shutdown(async {
            let _ = tokio::signal::ctrl_c().await;
        })
        .await
}
