import assert from "node:assert/strict";
import { createServer, type IncomingMessage, type ServerResponse } from "node:http";
import { after, before, test } from "node:test";

import { ApiError, ServiceClient } from "../src/api.js";

let baseUrl = "";
let server: ReturnType<typeof createServer>;
const seen: { path: string; body: unknown }[] = [];

function respond(res: ServerResponse, status: number, body: unknown): void {
  res.writeHead(status, { "Content-Type": "application/json" });
  res.end(JSON.stringify(body));
}

function handler(req: IncomingMessage, res: ServerResponse): void {
  let raw = "";
  req.on("data", (chunk) => (raw += chunk));
  req.on("end", () => {
    const body = raw ? JSON.parse(raw) : undefined;
    seen.push({ path: req.url ?? "", body });
    if (req.url === "/health") {
      respond(res, 200, { status: "ok", entries: 3 });
    } else if (req.url === "/generate") {
      const text = (body as { text?: string } | undefined)?.text ?? "";
      if (!text.trim()) {
        respond(res, 400, { code: "bad_request", detail: "text is empty" });
      } else {
        respond(res, 200, { qaps: [], teach_requests: [] });
      }
    } else if (req.url === "/teach") {
      respond(res, 200, { duplicate: true, qaps_now: [] });
    } else if (req.url?.startsWith("/db/entries")) {
      respond(res, 200, { entries: [], page: 2, per_page: 7, total: 0 });
    } else {
      respond(res, 400, { code: "bad_request", detail: "nope" });
    }
  });
}

before(async () => {
  server = createServer(handler);
  await new Promise<void>((resolve) => server.listen(0, "127.0.0.1", resolve));
  const address = server.address();
  if (address === null || typeof address === "string") throw new Error("no port");
  baseUrl = `http://127.0.0.1:${address.port}`;
});

after(() => server.close());

test("requests hit the documented endpoints with the documented bodies", async () => {
  const client = new ServiceClient(baseUrl);
  await client.health();
  await client.generate("A sentence.");
  await client.teach(4, "Who did it?");
  await client.entries(2, 7);
  assert.deepEqual(
    seen.map((s) => s.path),
    ["/health", "/generate", "/teach", "/db/entries?page=2&per_page=7"],
  );
  assert.deepEqual(seen[1].body, { text: "A sentence." });
  assert.deepEqual(seen[2].body, { request_id: 4, interrogative: "Who did it?" });
});

test("error bodies surface machine-readable codes", async () => {
  const client = new ServiceClient(baseUrl);
  await assert.rejects(
    () => client.generate(""),
    (err: unknown) => {
      assert.ok(err instanceof ApiError);
      assert.equal(err.status, 400);
      assert.equal(err.code, "bad_request");
      return true;
    },
  );
});
