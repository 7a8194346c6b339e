import { ApiClient } from "./api.js";
import { App } from "./app.js";

const params = new URLSearchParams(window.location.search);
const api = new ApiClient(params.get("api") ?? "", params.get("token"));
const app = new App(api);
app.mount();
app.showPage("input");
